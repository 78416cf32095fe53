"""Eulerian idempotents: algebra identities, eigenvector property, and
weight decompositions cross-checked against rank arithmetic."""

from fractions import Fraction

import pytest

from monhom.errors import BadParams
from monhom.gamma_chain import (
    COHOMOLOGICAL,
    HOMOLOGICAL,
    SymGroupElement,
    build_complex,
    harrison_dim_q,
    hochschild_dim_q,
)
from monhom.hc_modules import LEFT, RIGHT, trivial_module
from monhom.hodge import (
    HodgeProjectorSet,
    eulerian_idempotents,
    hodge_decomposition,
    total_shuffle_operator,
)
from monhom.monoids import (
    cyclic_group,
    product_monoid,
    semilattice_chain,
    trivial_monoid,
    truncated_add,
)


def test_total_shuffle_operator_small():
    assert total_shuffle_operator(1).is_zero()
    s2 = total_shuffle_operator(2)
    assert s2.terms == {(0, 1): 1, (1, 0): -1}
    s3 = total_shuffle_operator(3)
    assert len(s3.terms) == 5
    assert s3.terms[(0, 1, 2)] == 2
    with pytest.raises(BadParams):
        total_shuffle_operator(0)


def test_eulerian_idempotents_small():
    ps1 = eulerian_idempotents(1)
    assert ps1.projectors == (SymGroupElement.identity(1),)
    ps2 = eulerian_idempotents(2)
    half = Fraction(1, 2)
    assert ps2[1].terms == {(0, 1): half, (1, 0): half}
    assert ps2[2].terms == {(0, 1): half, (1, 0): -half}
    with pytest.raises(BadParams):
        ps2[3]
    with pytest.raises(BadParams):
        eulerian_idempotents(0)
    with pytest.raises(BadParams):
        eulerian_idempotents(6)


def test_projector_identities_up_to_degree_five():
    for n in range(1, 6):
        assert eulerian_idempotents(n).identity_violations() == []


def test_projectors_are_shuffle_eigenvectors():
    for n in range(2, 5):
        s = total_shuffle_operator(n)
        for i, e in enumerate(eulerian_idempotents(n), start=1):
            lam = Fraction(2 ** i - 2)
            assert s.mul(e).sub(e.scale(lam)).is_zero()
            assert e.mul(s).sub(e.scale(lam)).is_zero()


def test_violations_reported_for_broken_set():
    e = SymGroupElement.identity(2).scale(Fraction(1, 3))
    bad = HodgeProjectorSet(2, (e, e))
    names = bad.identity_violations()
    assert any("idempotent" in x for x in names)
    assert any("sum" in x for x in names)


def test_hodge_validation():
    cz = build_complex(cyclic_group(2), trivial_module(cyclic_group(2), RIGHT),
                       3, HOMOLOGICAL)
    with pytest.raises(BadParams):
        hodge_decomposition(cz, 2)
    cq = build_complex(cyclic_group(2), trivial_module(cyclic_group(2), RIGHT),
                       3, HOMOLOGICAL, ring="Q")
    with pytest.raises(BadParams):
        hodge_decomposition(cq, 0)
    with pytest.raises(BadParams):
        hodge_decomposition(cq, 3)


def test_weights_sum_and_match_totals():
    mons = [trivial_monoid(), cyclic_group(2), semilattice_chain(1),
            truncated_add(2)]
    for monoid in mons:
        cq = build_complex(monoid, trivial_module(monoid, RIGHT), 4,
                           HOMOLOGICAL, ring="Q")
        for n in range(1, 4):
            dims = hodge_decomposition(cq, n)
            assert len(dims) == n
            assert all(d >= 0 for d in dims)
            assert sum(dims) == hochschild_dim_q(cq, n)
        dq = build_complex(monoid, trivial_module(monoid, LEFT), 4,
                           COHOMOLOGICAL, ring="Q")
        for n in range(1, 4):
            dims = hodge_decomposition(dq, n)
            assert sum(dims) == hochschild_dim_q(dq, n)


def test_weight_one_piece_equals_harrison():
    mons = [cyclic_group(2), semilattice_chain(1), truncated_add(2),
            product_monoid(cyclic_group(2), cyclic_group(2)).monoid]
    for monoid in mons:
        cq = build_complex(monoid, trivial_module(monoid, RIGHT), 4,
                           HOMOLOGICAL, ring="Q")
        for n in range(2, 4):
            assert hodge_decomposition(cq, n)[0] == harrison_dim_q(cq, n)
        dq = build_complex(monoid, trivial_module(monoid, LEFT), 4,
                           COHOMOLOGICAL, ring="Q")
        for n in range(2, 4):
            assert hodge_decomposition(dq, n)[0] == harrison_dim_q(dq, n)
