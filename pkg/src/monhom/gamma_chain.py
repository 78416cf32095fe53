"""Chain complexes of functors on finite pointed sets.

A tuple (a_1..a_n) over the monoid C indexes a summand carrying the
coefficient value at the product a_1...a_n.  A pointed map f: [n] -> [m]
pushes the tuple to b with b_j the product over the fibre of j, while the
fibre of the basepoint acts through the coefficient structure map of b_0.
Alternating sums of the interval faces assemble the boundary; permutations
give the symmetric-group action used for shuffle operators, Harrison
groups, and Young-invariant computations.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    BadParams,
    ComplexityBudget,
    CompositionNonzero,
    DegreeMismatch,
    IndexOutOfRange,
    NotAComplex,
)
from .exact_linalg import (
    FgAbGroup,
    IntMatrix,
    RatMatrix,
    cokernel_group,
    homology_at,
    kernel_basis,
    lattice_basis,
    preimage_lattice,
    rank_of_col_dicts,
    solve_int,
)
from .hc_modules import LEFT, RIGHT

HOMOLOGICAL = "homological"
COHOMOLOGICAL = "cohomological"

DEFAULT_BUDGET = 10 ** 6


def resolve_budget(budget=None):
    if budget is not None:
        return int(budget)
    raw = os.environ.get("MONHOM_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise BadParams(f"MONHOM_BUDGET is not an integer: {raw!r}")


@dataclass(frozen=True)
class PointedMap:
    """Basepoint-preserving map between the pointed sets [n] and [m]."""

    source_size: int
    target_size: int
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if self.source_size < 0 or self.target_size < 0:
            raise BadParams("negative pointed-set size")
        if len(self.map) != self.source_size + 1:
            raise BadParams("pointed map table has the wrong length")
        if self.map[0] != 0:
            raise BadParams("pointed maps fix the basepoint")
        for v in self.map:
            if not 0 <= v <= self.target_size:
                raise BadParams(f"value {v} outside the target set")

    def __call__(self, j):
        return self.map[j]

    def then(self, other):
        """Composite: first self, then other."""
        if other.source_size != self.target_size:
            raise DegreeMismatch("pointed maps do not compose")
        return PointedMap(self.source_size, other.target_size,
                          tuple(other.map[v] for v in self.map))


def identity_pointed(n):
    return PointedMap(n, n, tuple(range(n + 1)))


def epsilon_map(i, n):
    """The face [n+1] -> [n]: keep j <= i, shift j > i down by one, except
    that the top point falls to the basepoint when i = n+1."""
    if n < 0 or i < 0 or i > n + 1:
        raise IndexOutOfRange(f"face index {i} out of range for target [{n}]")
    table = []
    for j in range(n + 2):
        if j == i == n + 1:
            table.append(0)
        elif j <= i:
            table.append(j)
        else:
            table.append(j - 1)
    return PointedMap(n + 1, n, tuple(table))


def push_tuple(f, t, monoid):
    """Image tuple (b_1..b_m), b_j the product over the fibre of j, plus
    the basepoint product b_0 (empty products are the identity)."""
    if len(t) != f.source_size:
        raise DegreeMismatch("tuple length does not match the map source")
    fibres = [[] for _ in range(f.target_size + 1)]
    for pos in range(1, f.source_size + 1):
        fibres[f.map[pos]].append(t[pos - 1])
    b0 = monoid.product(fibres[0])
    return (tuple(monoid.product(fibres[j]) for j in range(1, f.target_size + 1)),
            b0)


def _face_tuple(t, i, monoid):
    """push_tuple along epsilon_map(i, len(t)-1), unrolled for speed."""
    k = len(t)
    if i == 0:
        return t[1:], t[0]
    if i == k:
        return t[:-1], t[k - 1]
    return t[:i - 1] + (monoid.mul(t[i - 1], t[i]),) + t[i + 1:], monoid.identity


def _term_layout(monoid, coeff, n):
    tuples = list(itertools.product(monoid.elements, repeat=n))
    prods = [monoid.product(t) for t in tuples]
    offsets = []
    dim = 0
    for p in prods:
        offsets.append(dim)
        dim += coeff.ranks[p]
    return tuples, prods, offsets, dim


def _push_cols(f, monoid, coeff):
    """Sparse columns of the covariant action of f (right coefficients)."""
    src_tuples, _, src_offs, src_dim = _term_layout(monoid, coeff, f.source_size)
    tgt_tuples, tgt_prods, tgt_offs, tgt_dim = _term_layout(monoid, coeff,
                                                            f.target_size)
    tgt_index = {t: k for k, t in enumerate(tgt_tuples)}
    cols = [dict() for _ in range(src_dim)]
    for jt, t in enumerate(src_tuples):
        b, b0 = push_tuple(f, t, monoid)
        kb = tgt_index[b]
        A = coeff.act[(b0, tgt_prods[kb])]  # N(pi t) -> N(pi b)
        for j in range(A.cols):
            col = cols[src_offs[jt] + j]
            for i in range(A.rows):
                v = A.data[i][j]
                if v:
                    r = tgt_offs[kb] + i
                    col[r] = col.get(r, 0) + v
    return cols, tgt_dim


def _pull_cols(f, monoid, coeff):
    """Sparse columns of the contravariant action of f (left coefficients);
    columns are indexed by the f-target term, rows by the f-source term."""
    src_tuples, src_prods, src_offs, src_dim = _term_layout(monoid, coeff,
                                                            f.source_size)
    tgt_tuples, tgt_prods, tgt_offs, tgt_dim = _term_layout(monoid, coeff,
                                                            f.target_size)
    tgt_index = {t: k for k, t in enumerate(tgt_tuples)}
    cols = [dict() for _ in range(tgt_dim)]
    for jt, t in enumerate(src_tuples):
        b, b0 = push_tuple(f, t, monoid)
        kb = tgt_index[b]
        A = coeff.act[(b0, tgt_prods[kb])]  # M(pi b) -> M(pi t)
        for j in range(A.cols):
            col = cols[tgt_offs[kb] + j]
            for i in range(A.rows):
                v = A.data[i][j]
                if v:
                    r = src_offs[jt] + i
                    col[r] = col.get(r, 0) + v
    return cols, src_dim


def push_matrix(f, monoid, coeff):
    """Matrix of the covariant action of f on the tuple summands."""
    if coeff.side != RIGHT:
        raise BadParams("covariant pushes need a right module")
    cols, tgt_dim = _push_cols(f, monoid, coeff)
    return IntMatrix.from_col_dicts(cols, tgt_dim)


def pull_matrix(f, monoid, coeff):
    """Matrix of the contravariant action of f on the tuple summands."""
    if coeff.side != LEFT:
        raise BadParams("contravariant pulls need a left module")
    cols, src_dim = _pull_cols(f, monoid, coeff)
    return IntMatrix.from_col_dicts(cols, src_dim)


def _compose_cols(first, second):
    """Columns of (second-matrix) o (first-matrix), both sparse."""
    out = []
    for col in first:
        acc = {}
        for r, v in col.items():
            for rr, vv in second[r].items():
                nv = acc.get(rr, 0) + v * vv
                if nv:
                    acc[rr] = nv
                else:
                    acc.pop(rr, None)
        out.append(acc)
    return out


class GammaChainComplex:
    """Explicit (co)chain complex of a coefficient module over a monoid.

    Degree n is the direct sum over n-tuples (lexicographic order) of the
    coefficient value at the tuple product.  Homological complexes store
    the boundaries of right coefficients; cohomological complexes store
    the coboundaries of left coefficients.
    """

    def __init__(self, monoid, coeff, direction, ring, n_max, layouts, mats):
        self.monoid = monoid
        self.coeff = coeff
        self.direction = direction
        self.ring = ring
        self.n_max = n_max
        self._tuples = [lay[0] for lay in layouts]
        self._prods = [lay[1] for lay in layouts]
        self._offsets = [lay[2] for lay in layouts]
        self.dims = tuple(lay[3] for lay in layouts)
        self._mats = mats
        self._rel_cache = {}

    def term_dim(self, n):
        self._check_degree(n)
        return self.dims[n]

    def tuples_at(self, n):
        self._check_degree(n)
        return self._tuples[n]

    def prods_at(self, n):
        self._check_degree(n)
        return self._prods[n]

    def tuple_offsets(self, n):
        self._check_degree(n)
        return self._offsets[n]

    def _check_degree(self, n):
        if not 0 <= n <= self.n_max:
            raise DegreeMismatch(f"degree {n} outside 0..{self.n_max}")

    def boundary_cols(self, n):
        if self.direction != HOMOLOGICAL:
            raise BadParams("boundaries live on homological complexes")
        if not 1 <= n <= self.n_max:
            raise DegreeMismatch(f"boundary degree {n} outside 1..{self.n_max}")
        return self._mats[n]

    def boundary(self, n):
        return IntMatrix.from_col_dicts(self.boundary_cols(n), self.dims[n - 1])

    def coboundary_cols(self, n):
        if self.direction != COHOMOLOGICAL:
            raise BadParams("coboundaries live on cohomological complexes")
        if not 0 <= n <= self.n_max - 1:
            raise DegreeMismatch(
                f"coboundary degree {n} outside 0..{self.n_max - 1}")
        return self._mats[n + 1]

    def coboundary(self, n):
        return IntMatrix.from_col_dicts(self.coboundary_cols(n),
                                        self.dims[n + 1])

    def relation_cols(self, n):
        """Sparse columns of the blockwise value relations in degree n."""
        self._check_degree(n)
        cols = []
        for kt, p in enumerate(self._prods[n]):
            rel = self.coeff.rels[p]
            off = self._offsets[n][kt]
            for j in range(rel.cols):
                cols.append({off + i: rel.data[i][j]
                             for i in range(rel.rows) if rel.data[i][j]})
        return cols

    def relation_matrix(self, n):
        if n not in self._rel_cache:
            self._rel_cache[n] = IntMatrix.from_col_dicts(
                self.relation_cols(n), self.dims[n])
        return self._rel_cache[n]

    @property
    def has_torsion(self):
        return self.coeff.has_torsion

    def basis_labels(self, n):
        self._check_degree(n)
        labels = []
        for kt, t in enumerate(self._tuples[n]):
            head = "(" + ",".join(str(a) for a in t) + ")"
            for i in range(self.coeff.ranks[self._prods[n][kt]]):
                labels.append(f"{head}#{i}")
        return labels

    def to_json(self):
        degrees = []
        for n in range(self.n_max + 1):
            entry = {"n": n, "dim": self.dims[n],
                     "basis": self.basis_labels(n)}
            if self.direction == HOMOLOGICAL and n >= 1:
                entry["boundary"] = _cols_to_triplets(self._mats[n],
                                                      self.dims[n - 1])
            if self.direction == COHOMOLOGICAL and n < self.n_max:
                entry["coboundary"] = _cols_to_triplets(self._mats[n + 1],
                                                        self.dims[n + 1])
            degrees.append(entry)
        return {"direction": self.direction, "ring": self.ring,
                "n_max": self.n_max, "dims": list(self.dims),
                "degrees": degrees}


def _cols_to_triplets(cols, rows):
    trips = []
    for j, col in enumerate(cols):
        for i, v in sorted(col.items()):
            trips.append([i, j, v])
    trips.sort()
    return {"rows": rows, "cols": len(cols), "triplets": trips}


def _expected_side(direction):
    return RIGHT if direction == HOMOLOGICAL else LEFT


def build_complex(monoid, coeff, n_max, direction, budget=None, ring="Z"):
    """Assemble the complex up to degree n_max, checking d o d = 0.

    Raises ComplexityBudget before materializing anything when the total
    basis count would exceed the cap (parameter, MONHOM_BUDGET, or 10^6).
    """
    if direction not in (HOMOLOGICAL, COHOMOLOGICAL):
        raise BadParams(f"unknown direction {direction!r}")
    if ring not in ("Z", "Q"):
        raise BadParams(f"ring must be Z or Q, got {ring!r}")
    if n_max < 0:
        raise BadParams("negative degree cap")
    if coeff.monoid != monoid:
        raise BadParams("coefficient module lives over a different monoid")
    if coeff.side != _expected_side(direction):
        raise BadParams(f"{direction} complexes need {_expected_side(direction)}"
                        " coefficient modules")
    if ring == "Q" and coeff.has_torsion:
        raise BadParams("rational complexes need free-valued coefficients")

    cap = resolve_budget(budget)
    counts = [0] * monoid.size
    counts[monoid.identity] = 1
    total = coeff.ranks[monoid.identity]
    for _ in range(n_max):
        nxt = [0] * monoid.size
        for y in monoid.elements:
            c = counts[y]
            if c:
                for a in monoid.elements:
                    nxt[monoid.mul(y, a)] += c
        counts = nxt
        total += sum(c * coeff.ranks[x] for x, c in enumerate(counts))
    if total > cap:
        raise ComplexityBudget(
            f"complex needs {total} basis elements, cap is {cap}")

    layouts = [_term_layout(monoid, coeff, n) for n in range(n_max + 1)]
    index = [{t: k for k, t in enumerate(lay[0])} for lay in layouts]

    mats = {}
    for k in range(1, n_max + 1):
        tuples_k, _, offs_k, dim_k = layouts[k]
        _, prods_low, offs_low, dim_low = layouts[k - 1]
        idx_low = index[k - 1]
        cols = [dict() for _ in range(dim_k if direction == HOMOLOGICAL
                                      else dim_low)]
        for jt, t in enumerate(tuples_k):
            for i in range(k + 1):
                s, b0 = _face_tuple(t, i, monoid)
                sign = -1 if i % 2 else 1
                ks = idx_low[s]
                A = coeff.act[(b0, prods_low[ks])]
                if direction == HOMOLOGICAL:
                    # N(pi t) -> N(pi s): contributes to columns of degree k
                    for j in range(A.cols):
                        col = cols[offs_k[jt] + j]
                        for p in range(A.rows):
                            v = A.data[p][j]
                            if v:
                                r = offs_low[ks] + p
                                nv = col.get(r, 0) + sign * v
                                if nv:
                                    col[r] = nv
                                else:
                                    col.pop(r, None)
                else:
                    # M(pi s) -> M(pi t): contributes to columns of degree k-1
                    for j in range(A.cols):
                        col = cols[offs_low[ks] + j]
                        for p in range(A.rows):
                            v = A.data[p][j]
                            if v:
                                r = offs_k[jt] + p
                                nv = col.get(r, 0) + sign * v
                                if nv:
                                    col[r] = nv
                                else:
                                    col.pop(r, None)
        mats[k] = cols

    cx = GammaChainComplex(monoid, coeff, direction, ring, n_max, layouts, mats)
    _check_squares(cx)
    return cx


def _check_squares(cx):
    for k in range(1, cx.n_max):
        if cx.direction == HOMOLOGICAL:
            comp = _compose_cols(cx._mats[k + 1], cx._mats[k])
            target = k - 1
        else:
            comp = _compose_cols(cx._mats[k], cx._mats[k + 1])
            target = k + 1
        bad = [c for c in comp if c]
        if not bad:
            continue
        if not cx.has_torsion:
            raise CompositionNonzero(
                f"double (co)boundary is nonzero around degree {k}")
        dense = IntMatrix.from_col_dicts(bad, cx.dims[target])
        if solve_int(cx.relation_matrix(target), dense) is None:
            raise CompositionNonzero(
                f"double (co)boundary escapes the relations around degree {k}")


class SymGroupElement:
    """Formal rational combination of permutations of {1..n}, stored as
    0-based image tuples."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        clean = {}
        for perm, coeff in (terms or {}).items():
            perm = tuple(perm)
            if sorted(perm) != list(range(self.n)):
                raise BadParams(f"not a permutation of {self.n} letters: {perm}")
            c = Fraction(coeff)
            if c:
                clean[perm] = c
        self.terms = clean

    @classmethod
    def identity(cls, n):
        return cls(n, {tuple(range(n)): 1})

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def from_permutation(cls, perm):
        return cls(len(perm), {tuple(perm): 1})

    def _require_same(self, other):
        if not isinstance(other, SymGroupElement) or other.n != self.n:
            raise DegreeMismatch("mixed symmetric-group degrees")

    def add(self, other):
        self._require_same(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return SymGroupElement(self.n, terms)

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, scalar):
        c = Fraction(scalar)
        return SymGroupElement(self.n, {p: c * v for p, v in self.terms.items()})

    def mul(self, other):
        if not isinstance(other, SymGroupElement):
            return self.scale(other)
        self._require_same(other)
        terms = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                comp = tuple(p[q[i]] for i in range(self.n))
                nv = terms.get(comp, 0) + a * b
                terms[comp] = nv
        return SymGroupElement(self.n, terms)

    __add__ = add
    __sub__ = sub
    __mul__ = mul

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, SymGroupElement) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"SymGroupElement({self.n}, 0)"
        parts = [f"{c}*{p}" for p, c in sorted(self.terms.items())]
        return f"SymGroupElement({self.n}, {' + '.join(parts)})"


def perm_sign(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def shuffle_element(*parts):
    """Signed sum over the permutations increasing on each consecutive
    block of the given sizes."""
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise BadParams("block sizes must be positive")
    n = sum(parts)
    starts = [sum(parts[:b]) for b in range(len(parts))]
    terms = {}

    def place(block, avail, sigma):
        if block == len(parts):
            perm = tuple(sigma)
            terms[perm] = Fraction(perm_sign(perm))
            return
        for img in itertools.combinations(avail, parts[block]):
            taken = set(img)
            for k, pos in enumerate(img):
                sigma[starts[block] + k] = pos
            place(block + 1, [x for x in avail if x not in taken], sigma)

    place(0, list(range(n)), [0] * n)
    return SymGroupElement(n, terms)


def compositions(n, min_parts=2):
    """Ordered tuples of positive integers summing to n with at least
    min_parts entries."""
    out = []

    def rec(rem, acc):
        if rem == 0:
            if len(acc) >= min_parts:
                out.append(tuple(acc))
            return
        for p in range(1, rem + 1):
            acc.append(p)
            rec(rem - p, acc)
            acc.pop()

    rec(n, [])
    return out


def _sym_action_cols(cx, n, elem):
    """Sparse rational columns of the action of a group-algebra element on
    degree n of the complex."""
    if elem.n != n:
        raise DegreeMismatch(f"element of S_{elem.n} on degree {n}")
    cx._check_degree(n)
    tuples_n = cx.tuples_at(n)
    prods_n = cx.prods_at(n)
    offs = cx.tuple_offsets(n)
    index = {t: k for k, t in enumerate(tuples_n)}
    cols = [dict() for _ in range(cx.dims[n])]
    for perm, c in elem.terms.items():
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        for kt, t in enumerate(tuples_n):
            s = tuple(t[inv[j]] for j in range(n))
            ks = index[s]
            rank = cx.coeff.ranks[prods_n[kt]]
            if cx.direction == HOMOLOGICAL:
                src, dst = kt, ks
            else:
                src, dst = ks, kt
            for i in range(rank):
                col = cols[offs[src] + i]
                r = offs[dst] + i
                nv = col.get(r, 0) + c
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return cols


def sym_action(cx, n, elem):
    """Dense rational matrix of the group-algebra action on degree n."""
    cols = _sym_action_cols(cx, n, elem)
    data = [[Fraction(0)] * cx.dims[n] for _ in range(cx.dims[n])]
    for j, col in enumerate(cols):
        for i, v in col.items():
            data[i][j] = v
    return RatMatrix(data, cx.dims[n])


def _sym_action_int_cols(cx, n, elem):
    cols = _sym_action_cols(cx, n, elem)
    out = []
    for col in cols:
        d = {}
        for r, v in col.items():
            if v.denominator != 1:
                raise BadParams("integral action requested for a non-integral"
                                " element")
            d[r] = int(v)
        out.append(d)
    return out


def scale_cols_to_int(cols):
    """Clear denominators column by column (rank is unchanged)."""
    out = []
    for col in cols:
        if not col:
            out.append({})
            continue
        mult = lcm(*(v.denominator for v in col.values()))
        out.append({r: int(v * mult) for r, v in col.items()})
    return out


def hochschild(cx, n):
    """The degree-n (co)homology group of the complex."""
    if not 0 <= n < cx.n_max:
        raise BadParams(f"need 0 <= n < n_max = {cx.n_max}")
    if cx.ring == "Q":
        return FgAbGroup.free(hochschild_dim_q(cx, n))
    if cx.direction == HOMOLOGICAL:
        d_in = IntMatrix.from_col_dicts(cx._mats[n + 1], cx.dims[n])
        d_out = cx.boundary(n) if n >= 1 else IntMatrix.zeros(0, cx.dims[n])
        low = n - 1
    else:
        d_in = (IntMatrix.from_col_dicts(cx._mats[n], cx.dims[n])
                if n >= 1 else IntMatrix.zeros(cx.dims[n], 0))
        d_out = cx.coboundary(n)
        low = n + 1
    if not cx.has_torsion:
        return homology_at(d_out, d_in)
    if d_out.rows == 0:
        cycles = IntMatrix.identity(cx.dims[n])
    else:
        cycles = preimage_lattice(d_out, cx.relation_matrix(low))
    borders = IntMatrix.hstack([d_in, cx.relation_matrix(n)],
                               rows=cx.dims[n])
    X = solve_int(cycles, borders)
    assert X is not None, "boundaries escaped the cycle lattice"
    return cokernel_group(X)


def hochschild_dim_q(cx, n):
    """dim over Q of the degree-n (co)homology, by rank arithmetic."""
    if not 0 <= n < cx.n_max:
        raise BadParams(f"need 0 <= n < n_max = {cx.n_max}")
    if cx.has_torsion:
        raise BadParams("rational dimensions need free-valued coefficients")
    if cx.direction == HOMOLOGICAL:
        out_cols = cx._mats[n] if n >= 1 else []
        in_cols = cx._mats[n + 1]
    else:
        out_cols = cx._mats[n + 1]
        in_cols = cx._mats[n] if n >= 1 else []
    return cx.dims[n] - rank_of_col_dicts(out_cols) - rank_of_col_dicts(in_cols)


def leech_cohomology(monoid, coeff, n, budget=None):
    """Cohomology of the contravariant tuple complex with left coefficients."""
    cx = build_complex(monoid, coeff, n + 1, COHOMOLOGICAL, budget=budget)
    return hochschild(cx, n)


def _shuffle_int_cols(cx, m):
    """Integer columns of all k >= 2 block-shuffle actions on degree m,
    one list per composition."""
    return [(_sym_action_int_cols(cx, m, shuffle_element(parts)))
            for parts in compositions(m)]


def _concat_cols(col_lists):
    out = []
    for cols in col_lists:
        out.extend(cols)
    return out


def _stack_cols(col_lists, block_rows):
    """Stack matrices with identical column counts vertically, sparsely."""
    if not col_lists:
        return []
    width = len(col_lists[0])
    stacked = [dict() for _ in range(width)]
    for b, cols in enumerate(col_lists):
        off = b * block_rows
        for j, col in enumerate(cols):
            for r, v in col.items():
                stacked[j][off + r] = v
    return stacked


def _vstack_pair(top_cols, bottom_cols, top_rows):
    """Per-column concatenation of two sparse matrices with equal width."""
    out = []
    for tc, bc in zip(top_cols, bottom_cols):
        col = dict(tc)
        for r, v in bc.items():
            col[top_rows + r] = v
        out.append(col)
    return out


def _lattice_or_empty(cols, rows):
    if not cols:
        return IntMatrix.zeros(rows, 0)
    return lattice_basis(IntMatrix.from_col_dicts(cols, rows))


def _quotient_or_raise(K, S, message):
    X = solve_int(K, S)
    if X is None:
        raise NotAComplex(message)
    return cokernel_group(X)


def harrison(cx, n, direction=None):
    """Harrison group in degree n: homologically the quotient by all block
    shuffle images, cohomologically the joint shuffle kernel.  Over Q the
    answer is a free group of the computed dimension; over Z the shuffle
    span must be closed under the (co)boundary or NotAComplex is raised."""
    if direction is not None and direction != cx.direction:
        raise BadParams("direction does not match the complex")
    if not 0 <= n < cx.n_max:
        raise BadParams(f"need 0 <= n < n_max = {cx.n_max}")
    if cx.ring == "Q":
        return FgAbGroup.free(harrison_dim_q(cx, n))
    if n <= 1:
        return hochschild(cx, n)

    if cx.direction == HOMOLOGICAL:
        sh_n = _concat_cols(_shuffle_int_cols(cx, n))
        sh_low = _concat_cols(_shuffle_int_cols(cx, n - 1)) if n >= 1 else []
        sh_high = _concat_cols(_shuffle_int_cols(cx, n + 1))
        rel_low = cx.relation_cols(n - 1) if n >= 1 else []
        low_lat = _lattice_or_empty(sh_low + rel_low,
                                    cx.dims[n - 1] if n >= 1 else 0)
        n_lat = _lattice_or_empty(sh_n + cx.relation_cols(n), cx.dims[n])
        if n >= 1 and sh_n:
            moved = _compose_cols(sh_n, cx._mats[n])
            moved = [c for c in moved if c]
            if moved and solve_int(
                    low_lat, IntMatrix.from_col_dicts(moved, cx.dims[n - 1])) \
                    is None:
                raise NotAComplex("shuffle span is not boundary-closed at "
                                  f"degree {n}")
        if sh_high:
            moved = _compose_cols(sh_high, cx._mats[n + 1])
            moved = [c for c in moved if c]
            if moved and solve_int(
                    n_lat, IntMatrix.from_col_dicts(moved, cx.dims[n])) is None:
                raise NotAComplex("shuffle span is not boundary-closed at "
                                  f"degree {n + 1}")
        if n >= 1:
            cycles = preimage_lattice(cx.boundary(n), low_lat)
        else:
            cycles = IntMatrix.identity(cx.dims[n])
        borders = IntMatrix.hstack(
            [IntMatrix.from_col_dicts(cx._mats[n + 1], cx.dims[n]),
             IntMatrix.from_col_dicts(sh_n + cx.relation_cols(n), cx.dims[n])],
            rows=cx.dims[n])
        return _quotient_or_raise(cycles, borders,
                                  "quotient boundaries escape the cycle span")

    kernel_n = _shuffle_kernel(cx, n)
    kernel_low = _shuffle_kernel(cx, n - 1) if n >= 1 else None
    delta_n = IntMatrix.from_col_dicts(cx._mats[n + 1], cx.dims[n + 1])
    if n >= 1:
        delta_low = IntMatrix.from_col_dicts(cx._mats[n], cx.dims[n])
        image_low = delta_low.mul(kernel_low)
        _check_kernel_closure(cx, n, image_low)
    else:
        image_low = IntMatrix.zeros(cx.dims[n], 0)
    restricted = delta_n.mul(kernel_n)
    if cx.has_torsion:
        inner = preimage_lattice(restricted, cx.relation_matrix(n + 1))
    else:
        inner = kernel_basis(restricted)
    cycles = lattice_basis(kernel_n.mul(inner))
    borders = IntMatrix.hstack(
        [image_low, cx.relation_matrix(n)], rows=cx.dims[n])
    return _quotient_or_raise(cycles, borders,
                              "coboundaries escape the shuffle kernel")


def _shuffle_kernel(cx, m):
    """Basis of the joint kernel (modulo value relations) of all k >= 2
    shuffle actions on degree m."""
    col_lists = _shuffle_int_cols(cx, m)
    if not col_lists:
        return IntMatrix.identity(cx.dims[m])
    stacked = _stack_cols(col_lists, cx.dims[m])
    dense = IntMatrix.from_col_dicts(stacked, cx.dims[m] * len(col_lists))
    if not cx.has_torsion:
        return kernel_basis(dense)
    rel = cx.relation_matrix(m)
    blocks = []
    for b in range(len(col_lists)):
        for j in range(rel.cols):
            blocks.append({b * cx.dims[m] + i: rel.data[i][j]
                           for i in range(rel.rows) if rel.data[i][j]})
    rel_rep = IntMatrix.from_col_dicts(blocks, cx.dims[m] * len(col_lists))
    return preimage_lattice(dense, rel_rep)


def _check_kernel_closure(cx, n, image_low):
    """Coboundaries of shuffle-kernel cochains must again kill shuffles."""
    col_lists = _shuffle_int_cols(cx, n)
    if not col_lists or image_low.cols == 0:
        return
    stacked = _stack_cols(col_lists, cx.dims[n])
    moved = _compose_cols(image_low.col_dicts(), stacked)
    moved = [c for c in moved if c]
    if not moved:
        return
    if not cx.has_torsion:
        raise NotAComplex(f"shuffle kernel is not closed at degree {n}")
    rel = cx.relation_matrix(n)
    blocks = []
    for b in range(len(col_lists)):
        for j in range(rel.cols):
            blocks.append({b * cx.dims[n] + i: rel.data[i][j]
                           for i in range(rel.rows) if rel.data[i][j]})
    rel_rep = IntMatrix.from_col_dicts(blocks, cx.dims[n] * len(col_lists))
    if solve_int(rel_rep,
                 IntMatrix.from_col_dicts(moved, rel_rep.rows)) is None:
        raise NotAComplex(f"shuffle kernel is not closed at degree {n}")


def harrison_dim_q(cx, n):
    """Rational Harrison dimension in degree n by rank arithmetic."""
    if not 0 <= n < cx.n_max:
        raise BadParams(f"need 0 <= n < n_max = {cx.n_max}")
    if cx.has_torsion:
        raise BadParams("rational dimensions need free-valued coefficients")
    if n <= 1:
        return hochschild_dim_q(cx, n)

    def sh_cols(m):
        return _concat_cols(_shuffle_int_cols(cx, m)) if m >= 2 else []

    if cx.direction == HOMOLOGICAL:
        s_n, s_low, s_high = sh_cols(n), sh_cols(n - 1), sh_cols(n + 1)
        r_n = rank_of_col_dicts(s_n)
        r_low = rank_of_col_dicts(s_low)
        if s_n:
            moved = _compose_cols(s_n, cx._mats[n])
            if rank_of_col_dicts(s_low + moved) != r_low:
                raise NotAComplex(
                    f"shuffle span is not boundary-closed at degree {n}")
        if s_high:
            moved = _compose_cols(s_high, cx._mats[n + 1])
            if rank_of_col_dicts(s_n + moved) != r_n:
                raise NotAComplex(
                    f"shuffle span is not boundary-closed at degree {n + 1}")
        rank_out = rank_of_col_dicts(cx._mats[n] + s_low) - r_low
        rank_in = rank_of_col_dicts(cx._mats[n + 1] + s_n) - r_n
        return cx.dims[n] - r_n - rank_out - rank_in

    def stack(m):
        lists = _shuffle_int_cols(cx, m)
        return _stack_cols(lists, cx.dims[m]), len(lists) * cx.dims[m]

    st_n, rows_n = stack(n)
    st_low, rows_low = stack(n - 1)
    v_n = cx.dims[n] - rank_of_col_dicts(st_n)
    if st_n:
        # coboundaries of shuffle-killing cochains must again kill shuffles
        moved = _compose_cols(cx._mats[n], st_n)
        if st_low:
            combined = _vstack_pair(st_low, moved, rows_low)
            if rank_of_col_dicts(combined) != rank_of_col_dicts(st_low):
                raise NotAComplex(
                    f"shuffle kernel is not closed at degree {n}")
        elif any(moved):
            raise NotAComplex(
                f"shuffle kernel is not closed at degree {n}")

    def restricted_rank(m, st_m, st_rows):
        # dim of delta(V^m) = rank of [shuffle stack over delta] minus
        # the shuffle stack's own rank
        if not st_m:
            return rank_of_col_dicts(cx._mats[m + 1])
        combined = _vstack_pair(st_m, cx._mats[m + 1], st_rows)
        return rank_of_col_dicts(combined) - rank_of_col_dicts(st_m)

    rank_out = restricted_rank(n, st_n, rows_n)
    rank_in = restricted_rank(n - 1, st_low, rows_low)
    return v_n - rank_out - rank_in


def _young_generators(lam, n):
    gens = []
    start = 0
    for part in lam:
        for p in range(start, start + part - 1):
            perm = list(range(n))
            perm[p], perm[p + 1] = perm[p + 1], perm[p]
            gens.append(tuple(perm))
        start += part
    return gens


@dataclass(frozen=True)
class YExactnessReport:
    passed: bool
    degree: int
    partition: tuple
    witness: tuple | None
    detail: str


def y_exactness_check(hmap, n, lam, budget=None):
    """Surjectivity of a right-module map on Young-subgroup invariants of
    the degree-n term, checked exactly over the integers."""
    lam = tuple(int(p) for p in lam)
    if (not lam or any(p < 1 for p in lam) or sum(lam) != n
            or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1))):
        raise BadParams(f"{lam} is not a partition of {n}")
    src, tgt = hmap.source, hmap.target
    if src.side != RIGHT or tgt.side != RIGHT:
        raise BadParams("invariant surjectivity is checked for right modules")
    monoid = src.monoid
    cx1 = build_complex(monoid, src, n, HOMOLOGICAL, budget=budget)
    cx2 = build_complex(monoid, tgt, n, HOMOLOGICAL, budget=budget)
    gens = _young_generators(lam, n)
    K1 = _invariant_lattice(cx1, n, gens)
    K2 = _invariant_lattice(cx2, n, gens)

    cols = [dict() for _ in range(cx1.dims[n])]
    offs1, offs2 = cx1.tuple_offsets(n), cx2.tuple_offsets(n)
    for kt, p in enumerate(cx1.prods_at(n)):
        A = hmap.mats[p]
        for j in range(A.cols):
            col = cols[offs1[kt] + j]
            for i in range(A.rows):
                if A.data[i][j]:
                    col[offs2[kt] + i] = A.data[i][j]
    T = IntMatrix.from_col_dicts(cols, cx2.dims[n])

    reachable = IntMatrix.hstack([T.mul(K1), cx2.relation_matrix(n)],
                                 rows=cx2.dims[n])
    X = solve_int(reachable, K2)
    if X is not None:
        return YExactnessReport(True, n, lam, None,
                                f"all {K2.cols} invariant generators hit")
    for j in range(K2.cols):
        col = IntMatrix.from_cols([K2.column(j)], K2.rows)
        if solve_int(reachable, col) is None:
            return YExactnessReport(
                False, n, lam, (j, tuple(K2.column(j))),
                f"invariant generator {j} is not in the image")
    raise AssertionError("batched solve failed but every column solved")


def _invariant_lattice(cx, n, gens):
    if not gens:
        return IntMatrix.identity(cx.dims[n])
    blocks = []
    for g in gens:
        elem = SymGroupElement.from_permutation(g) - SymGroupElement.identity(n)
        blocks.append(_sym_action_int_cols(cx, n, elem))
    stacked = _stack_cols(blocks, cx.dims[n])
    dense = IntMatrix.from_col_dicts(stacked, cx.dims[n] * len(blocks))
    if not cx.has_torsion:
        return kernel_basis(dense)
    rel = cx.relation_matrix(n)
    rel_blocks = []
    for b in range(len(blocks)):
        for j in range(rel.cols):
            rel_blocks.append({b * cx.dims[n] + i: rel.data[i][j]
                               for i in range(rel.rows) if rel.data[i][j]})
    rel_rep = IntMatrix.from_col_dicts(rel_blocks, dense.rows)
    return preimage_lattice(dense, rel_rep)
