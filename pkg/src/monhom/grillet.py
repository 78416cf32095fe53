"""Square-zero (co)homology of commutative monoids.

Degree 0 is computed exactly over the integers: homologically as the
tensor of the coefficients with the universal derivation target, and
cohomologically as the derivation group.  Both values are cross-checked
against the degree-1 tuple-complex groups, which must agree; a mismatch
falsifies the implementation rather than the input.  Higher degrees are
exposed over the rationals only, where they coincide with the shuffle
quotient or kernel one degree up.

Two comparison oracles tie the monoid-level constructions to classical
algebra: the Kaehler presentation of the monoid algebra, and the bar
complex of the monoid algebra with module coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadParams, OracleMismatch
from .exact_linalg import (
    FgAbGroup,
    IntMatrix,
    cokernel_group,
    homology_at,
    lattice_basis,
    rank_of_col_dicts,
    solve_int,
)
from .gamma_chain import (
    COHOMOLOGICAL,
    HOMOLOGICAL,
    _cols_to_triplets,
    build_complex,
    harrison_dim_q,
    hochschild,
    leech_cohomology,
)
from .hc_modules import (
    LEFT,
    RIGHT,
    derivations,
    jstar,
    omega,
    tabulate_presented,
    tensor_over_hc,
)


def d0_homology(monoid, coeff, budget=None):
    """N tensored with the universal derivation target, degree-0 exactly.

    The same group must appear as the degree-1 homology of the tuple
    complex; the two computations share no code path.
    """
    if coeff.side != RIGHT:
        raise BadParams("degree-0 homology takes right coefficients")
    direct = tensor_over_hc(coeff, omega(monoid))
    cx = build_complex(monoid, coeff, 2, HOMOLOGICAL, budget=budget)
    from_complex = hochschild(cx, 1)
    if direct != from_complex:
        raise OracleMismatch(
            f"tensor path gives {direct} but the tuple complex gives"
            f" {from_complex} in degree 1")
    return direct


def d0_cohomology(monoid, coeff, budget=None):
    """The derivation group, cross-checked against degree-1 cohomology."""
    if coeff.side != LEFT:
        raise BadParams("degree-0 cohomology takes left coefficients")
    direct = derivations(monoid, coeff).group
    from_complex = leech_cohomology(monoid, coeff, 1, budget=budget)
    if direct != from_complex:
        raise OracleMismatch(
            f"derivation solve gives {direct} but the tuple complex gives"
            f" {from_complex} in degree 1")
    return direct


def grillet_char0(monoid, coeff, n, direction, budget=None):
    """Rational dimension in degree n >= 0, one degree below the shuffle
    quotient (homological) or shuffle kernel (cohomological)."""
    if n < 0:
        raise BadParams("negative degree")
    cx = build_complex(monoid, coeff, n + 2, direction, budget=budget,
                       ring="Q")
    return harrison_dim_q(cx, n + 1)


@dataclass(frozen=True)
class GrilletReport:
    """Exact degree-0 group plus rational dimensions upward."""

    direction: str
    monoid_label: str
    coeff_label: str
    degree_zero: FgAbGroup
    char0_dims: tuple

    def entries(self):
        out = [{"degree": 0, "group": self.degree_zero.to_json(),
                "path": "exact"}]
        for k, d in enumerate(self.char0_dims, start=1):
            out.append({"degree": k, "group": FgAbGroup.free(d).to_json(),
                        "path": "char0"})
        return out

    def to_json(self):
        return {"direction": self.direction, "monoid": self.monoid_label,
                "coefficients": self.coeff_label, "entries": self.entries()}


def grillet_report(monoid, coeff, direction, max_degree, budget=None,
                   monoid_label="", coeff_label=""):
    """Degree-0 exact value and char-0 dimensions through max_degree."""
    if direction not in (HOMOLOGICAL, COHOMOLOGICAL):
        raise BadParams(f"unknown direction {direction!r}")
    if max_degree < 0:
        raise BadParams("negative degree cap")
    if direction == HOMOLOGICAL:
        zero = d0_homology(monoid, coeff, budget=budget)
    else:
        zero = d0_cohomology(monoid, coeff, budget=budget)
    dims = tuple(grillet_char0(monoid, coeff, k, direction, budget=budget)
                 for k in range(1, max_degree + 1))
    return GrilletReport(direction, monoid_label, coeff_label, zero, dims)


def _pair_index(monoid, a, c):
    """Cover basis a*e translated by c, shared by both presentations."""
    return a * monoid.size + c


def _kaehler_direct_cols(monoid):
    """Translated relations e_{ab} - a e_b - b e_a of the algebra
    presentation, one column per unordered pair and translator."""
    size = monoid.size
    cols = []
    for a in monoid.elements:
        for b in range(a, size):
            for c0 in monoid.elements:
                col = {}
                for r, v in ((_pair_index(monoid, monoid.mul(a, b), c0), 1),
                             (_pair_index(monoid, b, monoid.mul(c0, a)), -1),
                             (_pair_index(monoid, a, monoid.mul(c0, b)), -1)):
                    nv = col.get(r, 0) + v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
                if col:
                    cols.append(col)
    return cols


def _kaehler_total_cols(monoid):
    """The monoid-level presentation, tabulated per degree and flattened
    into the same cover by forgetting the grading."""
    tab = tabulate_presented(omega(monoid))
    label_of = {f"d{a}": a for a in monoid.elements}
    cols = []
    for x in monoid.elements:
        basis = tab.basis_labels[x]
        rel = tab.rels[x]
        for j in range(rel.cols):
            col = {}
            for i in range(rel.rows):
                if rel.data[i][j]:
                    lab, c = basis[i]
                    col[_pair_index(monoid, label_of[lab], c)] = rel.data[i][j]
            cols.append(col)
    return cols


@dataclass(frozen=True)
class KaehlerReport:
    passed: bool
    ring: str
    group: FgAbGroup
    detail: str

    def to_json(self):
        return {"passed": self.passed, "ring": self.ring,
                "group": self.group.to_json(), "detail": self.detail}


def kaehler_compare(monoid, ring="Z"):
    """Match the algebra's differentials presentation against the flattened
    monoid-level one under the generator bijection da <-> e_a.

    Over Z the two relation lattices must coincide exactly; over Q the
    spans must.  The verdict travels in the report, never as an exception.
    """
    if ring not in ("Z", "Q"):
        raise BadParams(f"ring must be Z or Q, got {ring!r}")
    rows = monoid.size * monoid.size
    direct = _kaehler_direct_cols(monoid)
    total = _kaehler_total_cols(monoid)
    if ring == "Q":
        ra = rank_of_col_dicts(direct)
        rb = rank_of_col_dicts(total)
        both = rank_of_col_dicts(direct + total)
        passed = ra == rb == both
        group = FgAbGroup.free(rows - ra)
        detail = (f"spans agree at rank {ra}" if passed else
                  f"span ranks {ra}/{rb}, joint {both}")
        return KaehlerReport(passed, ring, group, detail)
    A = IntMatrix.from_col_dicts(direct, rows)
    B = IntMatrix.from_col_dicts(total, rows)
    lat_a = lattice_basis(A)
    lat_b = lattice_basis(B)
    passed = (solve_int(lat_a, B) is not None
              and solve_int(lat_b, A) is not None)
    group_a = cokernel_group(A)
    group_b = cokernel_group(B)
    if group_a != group_b:
        passed = False
    detail = ("relation lattices coincide" if passed else
              f"presentations differ: {group_a} vs {group_b}")
    return KaehlerReport(passed, ring, group_a, detail)


def _classical_bar_cols(monoid, kc, n):
    """Boundary of the algebra bar complex with symmetric coefficients, on
    the monomial basis, in the same tuple order as the functor complex."""
    r = kc.rank
    tuples_n = list(itertools.product(monoid.elements, repeat=n))
    tuples_low = list(itertools.product(monoid.elements, repeat=n - 1))
    index_low = {t: k for k, t in enumerate(tuples_low)}
    cols = [dict() for _ in range(len(tuples_n) * r)]
    for jt, t in enumerate(tuples_n):
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            if i == 0:
                s, actor = t[1:], t[0]
            elif i == n:
                s, actor = t[:-1], t[n - 1]
            else:
                s = t[:i - 1] + (monoid.mul(t[i - 1], t[i]),) + t[i + 1:]
                actor = None
            base = index_low[s] * r
            if actor is None:
                for j in range(r):
                    col = cols[jt * r + j]
                    nv = col.get(base + j, 0) + sign
                    if nv:
                        col[base + j] = nv
                    else:
                        col.pop(base + j, None)
            else:
                mat = kc.action[actor]
                for j in range(r):
                    col = cols[jt * r + j]
                    for p in range(r):
                        v = mat.data[p][j]
                        if v:
                            nv = col.get(base + p, 0) + sign * v
                            if nv:
                                col[base + p] = nv
                            else:
                                col.pop(base + p, None)
    return cols, len(tuples_low) * r


@dataclass(frozen=True)
class BarCompareReport:
    passed: bool
    max_degree: int
    boundary_match: tuple
    homology: tuple
    detail: str

    def to_json(self):
        return {"passed": self.passed, "max_degree": self.max_degree,
                "boundary_match": list(self.boundary_match),
                "homology": [g.to_json() for g in self.homology],
                "detail": self.detail}


def bar_complex_compare(monoid, kc, n_max, budget=None):
    """Byte-compare the algebra bar boundaries with the functor complex and
    recompute homology from the classical side alone."""
    if n_max > 4:
        raise BadParams("bar comparison capped at degree 4")
    if n_max < 1:
        raise BadParams("need at least one boundary to compare")
    if kc.ring != "Z":
        raise BadParams("bar comparison runs over the integers")
    cx = build_complex(monoid, jstar(kc, RIGHT), n_max, HOMOLOGICAL,
                       budget=budget)
    classical = {}
    matches = []
    for n in range(1, n_max + 1):
        cols, rows = _classical_bar_cols(monoid, kc, n)
        classical[n] = IntMatrix.from_col_dicts(cols, rows)
        matches.append(_cols_to_triplets(cols, rows)
                       == _cols_to_triplets(cx._mats[n], cx.dims[n - 1]))

    groups = []
    all_match = all(matches)
    for n in range(n_max):
        d_out = classical[n] if n >= 1 else IntMatrix.zeros(0, cx.dims[0])
        group = homology_at(d_out, classical[n + 1])
        groups.append(group)
        if group != hochschild(cx, n):
            all_match = False

    detail = ("boundaries and homology agree through degree "
              f"{n_max}" if all_match else
              f"per-degree boundary matches: {matches}")
    return BarCompareReport(all_match, n_max, tuple(matches), tuple(groups),
                            detail)
