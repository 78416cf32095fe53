"""Tuple-complex layer: faces, boundaries, homology, shuffles, Harrison,
and Young-invariant surjectivity, against hand-checked small cases."""

import json
import random

import pytest

from monhom.errors import (
    BadParams,
    ComplexityBudget,
    DegreeMismatch,
    IndexOutOfRange,
)
from monhom.exact_linalg import FgAbGroup, IntMatrix, RatMatrix
from monhom.gamma_chain import (
    COHOMOLOGICAL,
    HOMOLOGICAL,
    PointedMap,
    SymGroupElement,
    build_complex,
    compositions,
    epsilon_map,
    harrison,
    harrison_dim_q,
    hochschild,
    hochschild_dim_q,
    identity_pointed,
    leech_cohomology,
    perm_sign,
    pull_matrix,
    push_matrix,
    push_tuple,
    resolve_budget,
    shuffle_element,
    sym_action,
    y_exactness_check,
)
from monhom.hc_modules import (
    LEFT,
    RIGHT,
    HCModuleMap,
    derivations,
    jstar_finite_cyclic,
    std_projective,
    trivial_module,
)
from monhom.monoids import (
    cyclic_group,
    product_monoid,
    semilattice_chain,
    trivial_monoid,
    truncated_add,
)

Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
TRIV = trivial_monoid()


def groups(*spec):
    """Shorthand: groups(1) = Z, groups(0, 2) = Z/2, groups(0) = 0."""
    return FgAbGroup(spec[0], tuple(spec[1:]))


def test_epsilon_map_tables():
    assert epsilon_map(0, 1).map == (0, 0, 1)
    assert epsilon_map(1, 1).map == (0, 1, 1)
    assert epsilon_map(2, 1).map == (0, 1, 0)
    assert epsilon_map(0, 0).map == (0, 0)
    assert epsilon_map(1, 0).map == (0, 0)
    with pytest.raises(IndexOutOfRange):
        epsilon_map(3, 1)
    with pytest.raises(IndexOutOfRange):
        epsilon_map(-1, 2)


def test_pointed_map_validation():
    with pytest.raises(BadParams):
        PointedMap(2, 2, (1, 0, 2))       # moves the basepoint
    with pytest.raises(BadParams):
        PointedMap(2, 2, (0, 1))          # wrong table length
    with pytest.raises(BadParams):
        PointedMap(2, 1, (0, 2, 1))       # value outside target
    f = PointedMap(2, 1, (0, 1, 0))
    with pytest.raises(DegreeMismatch):
        f.then(PointedMap(2, 2, (0, 1, 2)))
    assert identity_pointed(3)(2) == 2


def test_push_tuple_fibres():
    f = epsilon_map(1, 1)                 # [2] -> [1], merge both entries
    b, b0 = push_tuple(f, (1, 1), Z2)
    assert b == (0,) and b0 == 0
    g = epsilon_map(2, 1)                 # [2] -> [1], drop the top entry
    b, b0 = push_tuple(g, (1, 1), Z2)
    assert b == (1,) and b0 == 1
    h = epsilon_map(0, 1)                 # [2] -> [1], drop the bottom entry
    b, b0 = push_tuple(h, (1, 0), Z2)
    assert b == (0,) and b0 == 1


def test_push_matrix_merges_products():
    coeff = trivial_module(Z2, RIGHT)
    A = push_matrix(epsilon_map(1, 1), Z2, coeff)
    # column of (a, b) carries a single 1 in row a + b
    assert A.rows == 2 and A.cols == 4
    for a in range(2):
        for b in range(2):
            col = A.column(2 * a + b)
            assert col == [1 if r == (a + b) % 2 else 0 for r in range(2)]


def _random_pointed(rng, src, tgt):
    return PointedMap(src, tgt,
                      (0,) + tuple(rng.randrange(tgt + 1) for _ in range(src)))


def test_push_functorial_pull_contravariant():
    rng = random.Random(20260814)
    mods = [
        (Z3, std_projective(Z3, 1, RIGHT), std_projective(Z3, 1, LEFT)),
        (Z2, jstar_finite_cyclic(Z2, 4, RIGHT), jstar_finite_cyclic(Z2, 4, LEFT)),
        (truncated_add(2), std_projective(truncated_add(2), 2, RIGHT),
         std_projective(truncated_add(2), 2, LEFT)),
    ]
    for _ in range(12):
        monoid, right, left = mods[rng.randrange(len(mods))]
        a, b, c = (rng.randrange(4) for _ in range(3))
        f = _random_pointed(rng, a, b)
        g = _random_pointed(rng, b, c)
        lhs = push_matrix(f.then(g), monoid, right)
        rhs = push_matrix(g, monoid, right).mul(push_matrix(f, monoid, right))
        assert lhs.sub(rhs).is_zero()
        lhs = pull_matrix(f.then(g), monoid, left)
        rhs = pull_matrix(f, monoid, left).mul(pull_matrix(g, monoid, left))
        assert lhs.sub(rhs).is_zero()


def test_push_requires_right_pull_requires_left():
    with pytest.raises(BadParams):
        push_matrix(epsilon_map(0, 1), Z2, trivial_module(Z2, LEFT))
    with pytest.raises(BadParams):
        pull_matrix(epsilon_map(0, 1), Z2, trivial_module(Z2, RIGHT))


def test_boundary_degree_one_vanishes():
    for monoid in (Z2, Z3, semilattice_chain(1)):
        cx = build_complex(monoid, trivial_module(monoid, RIGHT), 2,
                           HOMOLOGICAL)
        assert cx.boundary(1).is_zero()
        cy = build_complex(monoid, trivial_module(monoid, LEFT), 2,
                           COHOMOLOGICAL)
        assert cy.coboundary(0).is_zero()


def test_trivial_monoid_boundary_alternates():
    cx = build_complex(TRIV, trivial_module(TRIV, RIGHT), 5, HOMOLOGICAL)
    assert cx.dims == (1,) * 6
    for m in range(1, 6):
        mat = cx.boundary(m)
        if m % 2:
            assert mat.is_zero()
        else:
            assert mat.data == [[1]]
    for n in range(1, 4):
        assert hochschild(cx, n) == groups(0)
    assert hochschild(cx, 0) == groups(1)


def test_dimension_growth_and_budget():
    cx = build_complex(Z2, trivial_module(Z2, RIGHT), 4, HOMOLOGICAL)
    assert cx.dims == (1, 2, 4, 8, 16)
    assert len(cx.basis_labels(2)) == 4
    assert len(set(cx.basis_labels(2))) == 4
    with pytest.raises(ComplexityBudget):
        build_complex(Z3, trivial_module(Z3, RIGHT), 5, HOMOLOGICAL,
                      budget=100)


def test_budget_environment(monkeypatch):
    monkeypatch.setenv("MONHOM_BUDGET", "10")
    assert resolve_budget() == 10
    with pytest.raises(ComplexityBudget):
        build_complex(Z2, trivial_module(Z2, RIGHT), 4, HOMOLOGICAL)
    assert resolve_budget(5000) == 5000
    monkeypatch.setenv("MONHOM_BUDGET", "many")
    with pytest.raises(BadParams):
        resolve_budget()


def test_build_validation():
    with pytest.raises(BadParams):
        build_complex(Z2, trivial_module(Z2, LEFT), 2, HOMOLOGICAL)
    with pytest.raises(BadParams):
        build_complex(Z2, trivial_module(Z2, RIGHT), 2, COHOMOLOGICAL)
    with pytest.raises(BadParams):
        build_complex(Z2, trivial_module(Z3, RIGHT), 2, HOMOLOGICAL)
    with pytest.raises(BadParams):
        build_complex(Z2, trivial_module(Z2, RIGHT), 2, "sideways")
    with pytest.raises(BadParams):
        build_complex(Z2, jstar_finite_cyclic(Z2, 2, RIGHT), 2, HOMOLOGICAL,
                      ring="Q")


def test_double_boundary_is_literally_zero_for_free_values():
    cx = build_complex(Z2, std_projective(Z2, 1, RIGHT), 4, HOMOLOGICAL)
    for m in range(2, 5):
        assert cx.boundary(m - 1).mul(cx.boundary(m)).is_zero()
    cy = build_complex(Z3, trivial_module(Z3, LEFT), 3, COHOMOLOGICAL)
    for m in range(1, 3):
        assert cy.coboundary(m).mul(cy.coboundary(m - 1)).is_zero()


def test_homology_of_cyclic_groups_trivial_coefficients():
    cx = build_complex(Z2, trivial_module(Z2, RIGHT), 5, HOMOLOGICAL)
    expected = [groups(1), groups(0, 2), groups(0), groups(0, 2), groups(0)]
    assert [hochschild(cx, n) for n in range(5)] == expected
    cy = build_complex(Z3, trivial_module(Z3, RIGHT), 4, HOMOLOGICAL)
    assert [hochschild(cy, n) for n in range(4)] == [
        groups(1), groups(0, 3), groups(0), groups(0, 3)]


def test_homology_with_torsion_coefficients():
    cx = build_complex(Z2, jstar_finite_cyclic(Z2, 2, RIGHT), 4, HOMOLOGICAL)
    assert [hochschild(cx, n) for n in range(4)] == [groups(0, 2)] * 4
    cy = build_complex(Z2, jstar_finite_cyclic(Z2, 4, RIGHT), 4, HOMOLOGICAL)
    assert [hochschild(cy, n) for n in range(4)] == [
        groups(0, 4), groups(0, 2), groups(0, 2), groups(0, 2)]


def test_degree_zero_is_value_at_identity():
    cases = [
        (Z3, std_projective(Z3, 2, RIGHT)),
        (semilattice_chain(1), trivial_module(semilattice_chain(1), RIGHT)),
        (truncated_add(2), jstar_finite_cyclic(truncated_add(2), 3, RIGHT)),
    ]
    for monoid, coeff in cases:
        cx = build_complex(monoid, coeff, 1, HOMOLOGICAL)
        assert hochschild(cx, 0) == coeff.value_group(monoid.identity)


def test_cohomology_degree_zero_and_one():
    for monoid, coeff in [
            (Z2, trivial_module(Z2, LEFT)),
            (Z2, jstar_finite_cyclic(Z2, 4, LEFT)),
            (Z3, jstar_finite_cyclic(Z3, 3, LEFT)),
            (semilattice_chain(1), trivial_module(semilattice_chain(1), LEFT)),
    ]:
        assert leech_cohomology(monoid, coeff, 0) == \
            coeff.value_group(monoid.identity)
        assert leech_cohomology(monoid, coeff, 1) == \
            derivations(monoid, coeff).group


def test_group_cohomology_of_order_two():
    coeff = trivial_module(Z2, LEFT)
    assert leech_cohomology(Z2, coeff, 1) == groups(0)
    assert leech_cohomology(Z2, coeff, 2) == groups(0, 2)
    assert leech_cohomology(Z2, coeff, 3) == groups(0)


def test_rational_ring_matches_free_ranks():
    for monoid in (Z2, semilattice_chain(1), truncated_add(2)):
        cz = build_complex(monoid, trivial_module(monoid, RIGHT), 3,
                           HOMOLOGICAL)
        cq = build_complex(monoid, trivial_module(monoid, RIGHT), 3,
                           HOMOLOGICAL, ring="Q")
        for n in range(3):
            assert hochschild_dim_q(cz, n) == hochschild(cz, n).free_rank
            assert hochschild(cq, n) == \
                FgAbGroup.free(hochschild(cz, n).free_rank)


def test_sym_action_group_law():
    rng = random.Random(8141)
    cx = build_complex(Z2, jstar_finite_cyclic(Z2, 4, RIGHT), 3, HOMOLOGICAL)
    cy = build_complex(Z2, trivial_module(Z2, LEFT), 3, COHOMOLOGICAL)
    n = 3
    ident = SymGroupElement.identity(n)
    assert sym_action(cx, n, ident) == RatMatrix.identity(cx.dims[n])
    for _ in range(8):
        p = tuple(rng.sample(range(n), n))
        q = tuple(rng.sample(range(n), n))
        ep, eq = (SymGroupElement.from_permutation(x) for x in (p, q))
        lhs = sym_action(cx, n, ep.mul(eq))
        rhs = sym_action(cx, n, ep).mul(sym_action(cx, n, eq))
        assert lhs.sub(rhs).is_zero()
        # contravariant degree: the action reverses products
        lhs = sym_action(cy, n, ep.mul(eq))
        rhs = sym_action(cy, n, eq).mul(sym_action(cy, n, ep))
        assert lhs.sub(rhs).is_zero()


def test_shuffle_elements():
    e = shuffle_element(1, 1)
    assert e.terms == {(0, 1): 1, (1, 0): -1}
    assert shuffle_element(3) == SymGroupElement.identity(3)
    assert len(shuffle_element(1, 2).terms) == 3
    assert len(shuffle_element(2, 2).terms) == 6
    assert len(shuffle_element(1, 1, 1).terms) == 6
    assert perm_sign((1, 0, 2)) == -1
    with pytest.raises(BadParams):
        shuffle_element(0, 2)
    # on the one-point monoid every permutation acts as the identity,
    # so the signs of sh_{1,1} cancel exactly
    cx = build_complex(TRIV, trivial_module(TRIV, RIGHT), 3, HOMOLOGICAL)
    assert sym_action(cx, 2, e).is_zero()


def test_compositions_counts():
    assert set(compositions(2)) == {(1, 1)}
    assert set(compositions(3)) == {(1, 2), (2, 1), (1, 1, 1)}
    assert len(compositions(4)) == 7
    assert compositions(1) == []


def test_harrison_matches_low_degrees_and_trivial_monoid():
    cx = build_complex(Z2, trivial_module(Z2, RIGHT), 3, HOMOLOGICAL)
    assert harrison(cx, 1) == hochschild(cx, 1)
    assert harrison(cx, 0) == hochschild(cx, 0)
    tv = build_complex(TRIV, trivial_module(TRIV, RIGHT), 4, HOMOLOGICAL)
    for n in range(1, 4):
        assert harrison(tv, n) == groups(0)
    with pytest.raises(BadParams):
        harrison(cx, 1, direction=COHOMOLOGICAL)


def test_harrison_rational_vanishing_for_group():
    cq = build_complex(Z2, trivial_module(Z2, RIGHT), 5, HOMOLOGICAL,
                       ring="Q")
    for n in range(1, 5):
        assert harrison(cq, n) == groups(0)


def test_harrison_integer_vs_rational_free_rank():
    for monoid in (Z2, semilattice_chain(1), truncated_add(2)):
        coeff = trivial_module(monoid, RIGHT)
        cz = build_complex(monoid, coeff, 4, HOMOLOGICAL)
        cq = build_complex(monoid, coeff, 4, HOMOLOGICAL, ring="Q")
        for n in range(2, 4):
            assert harrison(cz, n).free_rank == harrison_dim_q(cq, n)
        left = trivial_module(monoid, LEFT)
        dz = build_complex(monoid, left, 4, COHOMOLOGICAL)
        dq = build_complex(monoid, left, 4, COHOMOLOGICAL, ring="Q")
        for n in range(2, 4):
            assert harrison(dz, n).free_rank == harrison_dim_q(dq, n)


def test_harrison_cohomological_with_torsion_values():
    cx = build_complex(Z2, jstar_finite_cyclic(Z2, 4, LEFT), 3, COHOMOLOGICAL)
    for n in range(3):
        g = harrison(cx, n)
        assert g.free_rank == 0
        if n <= 1:
            assert g == hochschild(cx, n)


def test_y_exactness_identity_map_passes():
    coeff = jstar_finite_cyclic(Z2, 2, RIGHT)
    hmap = HCModuleMap(coeff, coeff,
                       [IntMatrix.identity(1) for _ in Z2.elements])
    for lam in [(2,), (1, 1)]:
        report = y_exactness_check(hmap, 2, lam)
        assert report.passed and report.witness is None
        assert report.partition == lam


def test_y_exactness_reduction_map():
    source = trivial_module(Z2, RIGHT)
    target = jstar_finite_cyclic(Z2, 2, RIGHT)
    hmap = HCModuleMap(source, target,
                       [IntMatrix.identity(1) for _ in Z2.elements])
    for n, lam in [(2, (2,)), (2, (1, 1)), (3, (2, 1)), (3, (1, 1, 1)),
                   (3, (3,))]:
        report = y_exactness_check(hmap, n, lam)
        assert report.passed, (n, lam, report.detail)


def test_y_exactness_failure_carries_witness():
    coeff = trivial_module(TRIV, RIGHT)
    doubling = HCModuleMap(coeff, coeff, [IntMatrix([[2]])])
    report = y_exactness_check(doubling, 2, (1, 1))
    assert not report.passed
    assert report.witness is not None
    j, vec = report.witness
    assert any(v % 2 for v in vec)
    with pytest.raises(BadParams):
        y_exactness_check(doubling, 2, (1, 2))
    with pytest.raises(BadParams):
        y_exactness_check(doubling, 2, (3,))


def test_to_json_is_deterministic():
    cx = build_complex(Z2, jstar_finite_cyclic(Z2, 4, RIGHT), 2, HOMOLOGICAL)
    a = json.dumps(cx.to_json(), sort_keys=True)
    cx2 = build_complex(Z2, jstar_finite_cyclic(Z2, 4, RIGHT), 2, HOMOLOGICAL)
    b = json.dumps(cx2.to_json(), sort_keys=True)
    assert a == b
    payload = cx.to_json()
    assert payload["dims"] == [1, 2, 4]
    assert payload["degrees"][1]["boundary"]["rows"] == 1


def test_homology_on_product_monoid_kuenneth_spot_check():
    klein = product_monoid(Z2, Z2).monoid
    cx = build_complex(klein, trivial_module(klein, RIGHT), 3, HOMOLOGICAL)
    assert hochschild(cx, 0) == groups(1)
    assert hochschild(cx, 1) == groups(0, 2, 2)
    assert hochschild(cx, 2) == groups(0, 2)
