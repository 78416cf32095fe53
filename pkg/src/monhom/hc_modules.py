"""Modules over the divisibility category H(C) of a commutative monoid.

Objects of H(C) are the monoid elements; an arrow a -> ac for every c.
A left module M assigns a finitely generated group M(a) to each element
and a structure map c_*: M(a) -> M(ca) to each arrow; a right module N
carries maps the other way, c^*: N(ca) -> N(a).  Values are stored as
free covers Z^rank with an optional column lattice of relations, so
torsion-valued modules (for example constant Z/4) fit the same carrier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams
from .exact_linalg import (
    FgAbGroup,
    IntMatrix,
    cokernel_group,
    kernel_basis,
    preimage_lattice,
    solve_int,
)
from .monoids import FiniteCommMonoid, MonoidHom, product_monoid, quotient_set

LEFT = "left"
RIGHT = "right"


def _kron(A, B):
    rows, cols = A.rows * B.rows, A.cols * B.cols
    data = [[0] * cols for _ in range(rows)]
    for i, arow in enumerate(A.data):
        for j, a in enumerate(arow):
            if a:
                for p, brow in enumerate(B.data):
                    for q, b in enumerate(brow):
                        if b:
                            data[i * B.rows + p][j * B.cols + q] = a * b
    return IntMatrix(data, cols)


class TabulatedHCModule:
    """H(C)-module with explicit value ranks and structure matrices.

    ``act[(c, a)]`` is c_* : M(a) -> M(ca) on the left side and
    c^* : N(ca) -> N(a) on the right side.  ``rels[a]`` columns span the
    relation lattice inside the free cover Z^{ranks[a]} (empty = free).
    """

    __slots__ = ("side", "monoid", "ranks", "act", "rels", "basis_labels")

    def __init__(self, side, monoid, ranks, act, rels=None, basis_labels=None):
        if side not in (LEFT, RIGHT):
            raise BadParams(f"side must be left or right, got {side!r}")
        self.side = side
        self.monoid = monoid
        self.ranks = tuple(int(r) for r in ranks)
        if len(self.ranks) != monoid.size:
            raise BadParams("one rank per monoid element required")
        self.act = dict(act)
        if rels is None:
            rels = tuple(IntMatrix.zeros(r, 0) for r in self.ranks)
        self.rels = tuple(rels)
        self.basis_labels = basis_labels

    def act_matrix(self, c, a):
        return self.act[(c, a)]

    def rel_matrix(self, a):
        return self.rels[a]

    @property
    def has_torsion(self):
        return any(r.cols for r in self.rels)

    def value_group(self, a):
        if self.rels[a].cols == 0:
            return FgAbGroup.free(self.ranks[a])
        return cokernel_group(self.rels[a])

    def total_rank(self):
        return sum(self.ranks)

    def __repr__(self):
        return f"TabulatedHCModule({self.side}, ranks={self.ranks})"


def _shape_for(side, ranks, monoid, c, a):
    ca = monoid.mul(c, a)
    if side == LEFT:
        return ranks[ca], ranks[a]
    return ranks[a], ranks[ca]


def _eq_mod(X, Y, relmat):
    if X.shape() != Y.shape():
        return False
    diff = X.sub(Y)
    if relmat.cols == 0:
        return diff.is_zero()
    return solve_int(relmat, diff) is not None


def validate_module(module):
    """All functor-law violations, each with one witness; empty means valid."""
    mon = module.monoid
    e = mon.identity
    bad = []
    for c in mon.elements:
        for a in mon.elements:
            got = module.act.get((c, a))
            if got is None or got.shape() != _shape_for(module.side, module.ranks,
                                                        mon, c, a):
                bad.append(("Shape", (c, a)))
    if bad:
        return bad
    for a in mon.elements:
        if module.act[(e, a)] != IntMatrix.identity(module.ranks[a]):
            bad.append(("IdentityAction", (a,)))
            break
    for c1 in mon.elements:
        for c2 in mon.elements:
            hit = False
            for a in mon.elements:
                c2a = mon.mul(c2, a)
                if module.side == LEFT:
                    lhs = module.act[(mon.mul(c1, c2), a)]
                    rhs = module.act[(c1, c2a)].mul(module.act[(c2, a)])
                    target = mon.mul(mon.mul(c1, c2), a)
                else:
                    lhs = module.act[(mon.mul(c1, c2), a)]
                    rhs = module.act[(c2, a)].mul(module.act[(c1, c2a)])
                    target = a
                if not _eq_mod(lhs, rhs, module.rels[target]):
                    bad.append(("Composition", (c1, c2, a)))
                    hit = True
                    break
            if hit:
                break
        else:
            continue
        break
    for c in mon.elements:
        hit = False
        for a in mon.elements:
            rel_src = module.rels[a if module.side == LEFT else mon.mul(c, a)]
            if rel_src.cols == 0:
                continue
            target = mon.mul(c, a) if module.side == LEFT else a
            moved = module.act[(c, a)].mul(rel_src)
            if module.rels[target].cols == 0:
                ok = moved.is_zero()
            else:
                ok = solve_int(module.rels[target], moved) is not None
            if not ok:
                bad.append(("RelationsNotPreserved", (c, a)))
                hit = True
                break
        if hit:
            break
    return bad


def std_projective(monoid, a, side):
    """The representable module at a: values are the quotient sets (x:a)
    on the left (or (a:x) on the right) made free, with translation maps."""
    size = monoid.size
    if side == LEFT:
        bases = [quotient_set(x, a, monoid) for x in monoid.elements]
    else:
        bases = [quotient_set(a, x, monoid) for x in monoid.elements]
    index = [{u: i for i, u in enumerate(bs)} for bs in bases]
    ranks = [len(bs) for bs in bases]
    act = {}
    for c in monoid.elements:
        for x in monoid.elements:
            cx = monoid.mul(c, x)
            if side == LEFT:
                rows, cols, src, dst = ranks[cx], ranks[x], bases[x], index[cx]
            else:
                rows, cols, src, dst = ranks[x], ranks[cx], bases[cx], index[x]
            data = [[0] * cols for _ in range(rows)]
            for j, u in enumerate(src):
                data[dst[monoid.mul(c, u)]][j] = 1
            act[(c, x)] = IntMatrix(data, cols)
    labels = tuple(tuple(bs) for bs in bases)
    return TabulatedHCModule(side, monoid, ranks, act, basis_labels=labels)


def constant_module(monoid, side, rank=1, rel_columns=()):
    """Constant values with identity structure maps (j^* of a trivial-action
    group); rel_columns present a torsion value such as Z/4."""
    ident = IntMatrix.identity(rank)
    act = {(c, a): ident for c in monoid.elements for a in monoid.elements}
    rel = IntMatrix.from_cols([list(col) for col in rel_columns], rank)
    rels = tuple(rel for _ in monoid.elements)
    return TabulatedHCModule(side, monoid, [rank] * monoid.size, act, rels)


def trivial_module(monoid, side):
    return constant_module(monoid, side)


def jstar_finite_cyclic(monoid, k, side):
    """Constant Z/k with trivial action."""
    if k < 2:
        raise BadParams("modulus must be at least 2")
    return constant_module(monoid, side, rank=1, rel_columns=[[k]])


def pullback(hom, module):
    """Restriction of a module along a monoid hom into its base monoid."""
    if module.monoid != hom.target:
        raise BadParams("module does not live over the hom target")
    src = hom.source
    ranks = [module.ranks[hom(a)] for a in src.elements]
    act = {(c, a): module.act[(hom(c), hom(a))]
           for c in src.elements for a in src.elements}
    rels = tuple(module.rels[hom(a)] for a in src.elements)
    return TabulatedHCModule(module.side, src, ranks, act, rels)


def boxtimes(m1, m2, product=None):
    """External product over C1 x C2; value at (x1, x2) is the tensor of
    the two values, structure maps the Kronecker products."""
    if m1.side != m2.side:
        raise BadParams("external product needs matching sides")
    if m1.has_torsion or m2.has_torsion:
        raise BadParams("external product implemented for free-valued modules")
    if product is None:
        product = product_monoid(m1.monoid, m2.monoid)
    mon = product.monoid
    m2size = m2.monoid.size
    ranks = [m1.ranks[i // m2size] * m2.ranks[i % m2size] for i in mon.elements]
    act = {}
    for c in mon.elements:
        c1, c2 = divmod(c, m2size)
        for a in mon.elements:
            a1, a2 = divmod(a, m2size)
            act[(c, a)] = _kron(m1.act[(c1, a1)], m2.act[(c2, a2)])
    return TabulatedHCModule(m1.side, mon, ranks, act)


@dataclass(frozen=True)
class KCModule:
    """Finitely generated module over the monoid algebra K[C]."""

    monoid: FiniteCommMonoid
    ring: str
    rank: int
    action: dict

    def __post_init__(self):
        if self.ring not in ("Z", "Q"):
            raise BadParams(f"ring must be Z or Q, got {self.ring!r}")
        if self.rank < 0:
            raise BadParams("negative rank")

    def validate(self):
        bad = []
        ident_cls = self.action[self.monoid.identity]
        if ident_cls != type(ident_cls).identity(self.rank):
            bad.append(("IdentityAction", (self.monoid.identity,)))
        for a in self.monoid.elements:
            for b in self.monoid.elements:
                if self.action[self.monoid.mul(a, b)] != \
                        self.action[a].mul(self.action[b]):
                    bad.append(("Composition", (a, b)))
                    return bad
        return bad


def regular_kc_module(monoid, ring="Z"):
    """K[C] acting on itself; multiplication by c permutes-and-merges the
    monomial basis."""
    size = monoid.size
    action = {}
    for c in monoid.elements:
        data = [[0] * size for _ in range(size)]
        for x in monoid.elements:
            data[monoid.mul(c, x)][x] = 1
        action[c] = IntMatrix(data, size)
    return KCModule(monoid, ring, size, action)


def trivial_kc_module(monoid, ring="Z"):
    """Rank-one K[C]-module with every element acting as the identity."""
    action = {c: IntMatrix.identity(1) for c in monoid.elements}
    return KCModule(monoid, ring, 1, action)


def jstar(kc, side=LEFT):
    """Constant H(C)-module with every value the K[C]-module's underlying
    group and every structure map the action of the translating element."""
    if kc.ring != "Z":
        raise BadParams("only integer K[C]-modules pull back to integer carriers")
    mon = kc.monoid
    act = {(c, a): kc.action[c] for c in mon.elements for a in mon.elements}
    return TabulatedHCModule(side, mon, [kc.rank] * mon.size, act)


def jlower(module):
    """Total K[C]-module of a left module: the direct sum of all values,
    with c acting blockwise through c_* into the block of c*x."""
    if module.side != LEFT:
        raise BadParams("total module is taken of a left module")
    if module.has_torsion:
        raise BadParams("total module implemented for free-valued modules")
    mon = module.monoid
    offs = [0]
    for r in module.ranks:
        offs.append(offs[-1] + r)
    total = offs[-1]
    action = {}
    for c in mon.elements:
        data = [[0] * total for _ in range(total)]
        for x in mon.elements:
            block = module.act[(c, x)]
            cx = mon.mul(c, x)
            for i in range(block.rows):
                row = data[offs[cx] + i]
                for j in range(block.cols):
                    if block.data[i][j]:
                        row[offs[x] + j] = block.data[i][j]
        action[c] = IntMatrix(data, total)
    return KCModule(mon, "Z", total, action)


@dataclass(frozen=True)
class HCModuleMap:
    """Degreewise map between modules of the same side over one monoid."""

    source: TabulatedHCModule
    target: TabulatedHCModule
    mats: tuple

    def __post_init__(self):
        if self.source.monoid != self.target.monoid:
            raise BadParams("map between modules over different monoids")
        if self.source.side != self.target.side:
            raise BadParams("map between modules of different sides")
        object.__setattr__(self, "mats", tuple(self.mats))
        mon = self.source.monoid
        for a in mon.elements:
            if self.mats[a].shape() != (self.target.ranks[a], self.source.ranks[a]):
                raise BadParams(f"component at {a} has the wrong shape")
        for c in mon.elements:
            for a in mon.elements:
                ca = mon.mul(c, a)
                if self.source.side == LEFT:
                    lhs = self.mats[ca].mul(self.source.act[(c, a)])
                    rhs = self.target.act[(c, a)].mul(self.mats[a])
                    relm = self.target.rels[ca]
                else:
                    lhs = self.mats[a].mul(self.source.act[(c, a)])
                    rhs = self.target.act[(c, a)].mul(self.mats[ca])
                    relm = self.target.rels[a]
                if not _eq_mod(lhs, rhs, relm):
                    raise BadParams(f"map is not natural at (c={c}, a={a})")


@dataclass(frozen=True)
class PresentedHCModule:
    """Left module given by generators in degrees and translated relations.

    A relation of degree d is a formal sum of pairs (generator, translator)
    with integer coefficients, subject to deg(g) * c = d for each term.
    """

    monoid: FiniteCommMonoid
    generators: tuple  # of (label, degree)
    relations: tuple   # of (degree, ((label, c, coeff), ...))

    def __post_init__(self):
        labels = [g for g, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise BadParams("duplicate generator labels")
        degree_of = dict(self.generators)
        for rdeg, terms in self.relations:
            for label, c, coeff in terms:
                if label not in degree_of:
                    raise BadParams(f"relation uses unknown generator {label!r}")
                if self.monoid.mul(degree_of[label], c) != rdeg:
                    raise BadParams(
                        f"term ({label}, {c}) does not land in degree {rdeg}")


def omega(monoid):
    """Universal target of derivations: one generator da per element,
    with d(ab) = a*db + b*da imposed for every unordered pair."""
    gens = tuple((f"d{a}", a) for a in monoid.elements)
    rels = []
    for a in monoid.elements:
        for b in range(a, monoid.size):
            terms = {}
            terms[(f"d{monoid.mul(a, b)}", monoid.identity)] = 1
            key_b = (f"d{b}", a)
            terms[key_b] = terms.get(key_b, 0) - 1
            key_a = (f"d{a}", b)
            terms[key_a] = terms.get(key_a, 0) - 1
            flat = tuple((lab, c, v) for (lab, c), v in terms.items() if v)
            if flat:
                rels.append((monoid.mul(a, b), flat))
    return PresentedHCModule(monoid, gens, tuple(rels))


def tabulate_presented(presented):
    """Expand a presentation into explicit per-element values.

    The value at x is free on the pairs (generator g, translator c) with
    deg(g) * c = x, modulo all translates of the relations that land in x;
    structure maps just retranslate the pairs.
    """
    mon = presented.monoid
    degree_of = dict(presented.generators)
    bases = []
    for x in mon.elements:
        basis = [(lab, c) for lab, gdeg in presented.generators
                 for c in quotient_set(x, gdeg, mon)]
        bases.append(basis)
    index = [{pair: i for i, pair in enumerate(bs)} for bs in bases]
    ranks = [len(bs) for bs in bases]

    act = {}
    for c0 in mon.elements:
        for x in mon.elements:
            cx = mon.mul(c0, x)
            data = [[0] * ranks[x] for _ in range(ranks[cx])]
            for j, (lab, c) in enumerate(bases[x]):
                data[index[cx][(lab, mon.mul(c0, c))]][j] = 1
            act[(c0, x)] = IntMatrix(data, ranks[x])

    rels = []
    for x in mon.elements:
        cols = []
        for rdeg, terms in presented.relations:
            for c in quotient_set(x, rdeg, mon):
                col = [0] * ranks[x]
                for lab, ct, coeff in terms:
                    col[index[x][(lab, mon.mul(c, ct))]] += coeff
                cols.append(col)
        rels.append(IntMatrix.from_cols(cols, ranks[x]))
    labels = tuple(tuple(bs) for bs in bases)
    return TabulatedHCModule(LEFT, mon, ranks, act, tuple(rels),
                             basis_labels=labels)


def _offsets(sizes):
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    return offs


def _block_diag(mats):
    offs_r = _offsets([m.rows for m in mats])
    offs_c = _offsets([m.cols for m in mats])
    trips = []
    for k, m in enumerate(mats):
        for i, row in enumerate(m.data):
            for j, v in enumerate(row):
                if v:
                    trips.append((offs_r[k] + i, offs_c[k] + j, v))
    return IntMatrix.from_triplets(offs_r[-1], offs_c[-1], trips)


def tensor_over_hc(right_mod, left_arg):
    """right_mod tensored with a left module over H(C).

    The balancing rule c^*(z) (x) y = z (x) c_*(y) is imposed columnwise;
    a presented left argument is collapsed generator-by-generator first
    (tensoring against a translate-free cover picks out the value at the
    generator degree).
    """
    if right_mod.side != RIGHT:
        raise BadParams("first tensor factor must be a right module")
    mon = right_mod.monoid
    if isinstance(left_arg, PresentedHCModule):
        if left_arg.monoid != mon:
            raise BadParams("tensor factors live over different monoids")
        degree_of = dict(left_arg.generators)
        gens = [(lab, right_mod.ranks[deg]) for lab, deg in left_arg.generators]
        offs = _offsets([r for _, r in gens])
        gen_pos = {lab: k for k, (lab, _) in enumerate(gens)}
        total = offs[-1]
        cols = []
        for rdeg, terms in left_arg.relations:
            for i in range(right_mod.ranks[rdeg]):
                col = [0] * total
                for lab, ct, coeff in terms:
                    gdeg = degree_of[lab]
                    mat = right_mod.act[(ct, gdeg)]  # N(rdeg) -> N(gdeg)
                    base = offs[gen_pos[lab]]
                    for p in range(mat.rows):
                        if mat.data[p][i]:
                            col[base + p] += coeff * mat.data[p][i]
                cols.append(col)
        for lab, gdeg in left_arg.generators:
            relm = right_mod.rels[gdeg]
            base = offs[gen_pos[lab]]
            for j in range(relm.cols):
                col = [0] * total
                for i in range(relm.rows):
                    col[base + i] = relm.data[i][j]
                cols.append(col)
        return cokernel_group(IntMatrix.from_cols(cols, total))

    left_mod = left_arg
    if left_mod.side != LEFT:
        raise BadParams("second tensor factor must be a left module")
    if left_mod.monoid != mon:
        raise BadParams("tensor factors live over different monoids")
    pair_rank = [right_mod.ranks[a] * left_mod.ranks[a] for a in mon.elements]
    offs = _offsets(pair_rank)
    total = offs[-1]

    def gen(a, i, j):
        return offs[a] + i * left_mod.ranks[a] + j

    cols = []
    for c in mon.elements:
        for a in mon.elements:
            ca = mon.mul(c, a)
            actN = right_mod.act[(c, a)]   # N(ca) -> N(a)
            actM = left_mod.act[(c, a)]    # M(a)  -> M(ca)
            for i in range(right_mod.ranks[ca]):
                for j in range(left_mod.ranks[a]):
                    col = [0] * total
                    for p in range(actN.rows):
                        if actN.data[p][i]:
                            col[gen(a, p, j)] += actN.data[p][i]
                    for q in range(actM.rows):
                        if actM.data[q][j]:
                            col[gen(ca, i, q)] -= actM.data[q][j]
                    if any(col):
                        cols.append(col)
    for a in mon.elements:
        for relm, other_rank, is_right in ((right_mod.rels[a],
                                            left_mod.ranks[a], True),
                                           (left_mod.rels[a],
                                            right_mod.ranks[a], False)):
            for jcol in range(relm.cols):
                for k in range(other_rank):
                    col = [0] * total
                    for i in range(relm.rows):
                        if relm.data[i][jcol]:
                            idx = gen(a, i, k) if is_right else gen(a, k, i)
                            col[idx] = relm.data[i][jcol]
                    cols.append(col)
    return cokernel_group(IntMatrix.from_cols(cols, total))


@dataclass(frozen=True)
class LinearSolution:
    """Solution group of an integer system, with a lattice basis for the
    solutions on the free covers and the unknown-block layout."""

    group: FgAbGroup
    basis: IntMatrix
    layout: tuple  # of (element, rank)


def _solve_linear_group(eqs, unknown_rels, equation_rels, layout):
    if equation_rels.cols == 0:
        K = kernel_basis(eqs)
    else:
        K = preimage_lattice(eqs, equation_rels)
    if unknown_rels.cols == 0:
        return LinearSolution(FgAbGroup.free(K.cols), K, layout)
    X = solve_int(K, unknown_rels)
    assert X is not None, "unknown-space relations escaped the solution lattice"
    return LinearSolution(cokernel_group(X), K, layout)


def derivations(monoid, module):
    """Maps a -> delta(a) in M(a) with delta(ab) = a*delta(b) + b*delta(a).

    Solved exactly over the integers; torsion values are handled through
    the relation lattices on both the unknown and the equation side.
    """
    if module.side != LEFT:
        raise BadParams("derivations take values in a left module")
    mon = module.monoid
    offs = _offsets(module.ranks)
    total = offs[-1]
    rows = []
    eq_rel_blocks = []
    for a in mon.elements:
        for b in mon.elements:
            ab = mon.mul(a, b)
            act_a = module.act[(a, b)]   # M(b) -> M(ab)
            act_b = module.act[(b, a)]   # M(a) -> M(ab)
            for r in range(module.ranks[ab]):
                row = [0] * total
                row[offs[ab] + r] += 1
                for j in range(module.ranks[b]):
                    row[offs[b] + j] -= act_a.data[r][j]
                for j in range(module.ranks[a]):
                    row[offs[a] + j] -= act_b.data[r][j]
                rows.append(row)
            eq_rel_blocks.append(module.rels[ab])
    eqs = IntMatrix(rows, total)
    if module.has_torsion:
        unknown_rels = _block_diag([module.rels[a] for a in mon.elements])
        equation_rels = _block_diag(eq_rel_blocks)
    else:
        unknown_rels = IntMatrix.zeros(total, 0)
        equation_rels = IntMatrix.zeros(eqs.rows, 0)
    layout = tuple((a, module.ranks[a]) for a in mon.elements)
    return _solve_linear_group(eqs, unknown_rels, equation_rels, layout)


def hom_from_presented(presented, module):
    """Module maps out of a presentation: pick images of the generators,
    subject to every relation mapping to zero."""
    if module.side != LEFT:
        raise BadParams("hom target must be a left module")
    mon = module.monoid
    degree_of = dict(presented.generators)
    gen_rank = [module.ranks[deg] for _, deg in presented.generators]
    offs = _offsets(gen_rank)
    gen_pos = {lab: k for k, (lab, _) in enumerate(presented.generators)}
    total = offs[-1]
    rows = []
    eq_rel_blocks = []
    for rdeg, terms in presented.relations:
        for r in range(module.ranks[rdeg]):
            row = [0] * total
            for lab, ct, coeff in terms:
                act = module.act[(ct, degree_of[lab])]  # M(deg g) -> M(rdeg)
                base = offs[gen_pos[lab]]
                for j in range(act.cols):
                    if act.data[r][j]:
                        row[base + j] += coeff * act.data[r][j]
            rows.append(row)
        eq_rel_blocks.append(module.rels[rdeg])
    eqs = IntMatrix(rows, total) if rows else IntMatrix.zeros(0, total)
    if module.has_torsion:
        unknown_rels = _block_diag(
            [module.rels[deg] for _, deg in presented.generators])
        equation_rels = _block_diag(eq_rel_blocks) \
            if eq_rel_blocks else IntMatrix.zeros(0, 0)
    else:
        unknown_rels = IntMatrix.zeros(total, 0)
        equation_rels = IntMatrix.zeros(eqs.rows, 0)
    layout = tuple((deg, module.ranks[deg]) for _, deg in presented.generators)
    return _solve_linear_group(eqs, unknown_rels, equation_rels, layout)


def hom_rank_tabulated(m1, m2):
    """Rank of the group of module maps m1 -> m2 (free-valued modules)."""
    if m1.monoid != m2.monoid or m1.side != m2.side:
        raise BadParams("hom between incompatible modules")
    if m1.has_torsion or m2.has_torsion:
        raise BadParams("hom rank implemented for free-valued modules")
    mon = m1.monoid
    sizes = [m2.ranks[a] * m1.ranks[a] for a in mon.elements]
    offs = _offsets(sizes)
    total = offs[-1]

    def unknown(a, i, j):
        # entry (i, j) of the component at a, row-major
        return offs[a] + i * m1.ranks[a] + j

    rows = []
    for c in mon.elements:
        for a in mon.elements:
            ca = mon.mul(c, a)
            if m1.side == LEFT:
                # phi_{ca} . act1 = act2 . phi_a  on M1(a) -> M2(ca)
                A1, A2 = m1.act[(c, a)], m2.act[(c, a)]
                for i in range(m2.ranks[ca]):
                    for j in range(m1.ranks[a]):
                        row = [0] * total
                        for k in range(m1.ranks[ca]):
                            if A1.data[k][j]:
                                row[unknown(ca, i, k)] += A1.data[k][j]
                        for k in range(m2.ranks[a]):
                            if A2.data[i][k]:
                                row[unknown(a, k, j)] -= A2.data[i][k]
                        rows.append(row)
            else:
                # phi_a . act1 = act2 . phi_{ca}  on N1(ca) -> N2(a)
                A1, A2 = m1.act[(c, a)], m2.act[(c, a)]
                for i in range(m2.ranks[a]):
                    for j in range(m1.ranks[ca]):
                        row = [0] * total
                        for k in range(m1.ranks[a]):
                            if A1.data[k][j]:
                                row[unknown(a, i, k)] += A1.data[k][j]
                        for k in range(m2.ranks[ca]):
                            if A2.data[i][k]:
                                row[unknown(ca, k, j)] -= A2.data[i][k]
                        rows.append(row)
    eqs = IntMatrix(rows, total) if rows else IntMatrix.zeros(0, total)
    return kernel_basis(eqs).cols


def hom_rank_kc(a1, a2):
    """Rank of the group of K[C]-module maps a1 -> a2 (ring Z)."""
    if a1.monoid != a2.monoid or a1.ring != "Z" or a2.ring != "Z":
        raise BadParams("hom between incompatible algebra modules")
    total = a2.rank * a1.rank
    rows = []
    for c in a1.monoid.elements:
        A1, A2 = a1.action[c], a2.action[c]
        for i in range(a2.rank):
            for j in range(a1.rank):
                row = [0] * total
                for k in range(a1.rank):
                    if A1.data[k][j]:
                        row[i * a1.rank + k] += A1.data[k][j]
                for k in range(a2.rank):
                    if A2.data[i][k]:
                        row[k * a1.rank + j] -= A2.data[i][k]
                rows.append(row)
    eqs = IntMatrix(rows, total) if rows else IntMatrix.zeros(0, total)
    return kernel_basis(eqs).cols
