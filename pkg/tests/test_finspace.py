"""Topologies, continuous maps and the regular-closed machinery."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdlab.boolalg import identity_hom
from sdlab.errors import AxiomViolationError, NotDenseError, PreconditionError
from sdlab.finspace import (
    FinTopSpace,
    SpaceMap,
    all_point_maps,
    clopen_algebra,
    co_on_map,
    compose_maps,
    dense_transfer,
    discrete_space,
    enumerate_topologies,
    generate_topology,
    identity_map,
    regular_closed_algebra,
    regular_closed_bruteforce,
    sierpinski_space,
    space_predicates,
)


def test_topology_counts():
    # labelled topologies on 0..4 points
    assert [sum(1 for _ in enumerate_topologies(n)) for n in range(5)] == [
        1,
        1,
        4,
        29,
        355,
    ]


def test_opens_must_close_under_union_and_intersection():
    with pytest.raises(AxiomViolationError):
        FinTopSpace(2, frozenset({0, 1, 2}))
    with pytest.raises(AxiomViolationError):
        FinTopSpace(2, frozenset({0, 3, 8}))


def test_generate_topology_from_basis():
    s = generate_topology(3, (3, 6))
    assert s.opens == frozenset({0, 2, 3, 6, 7})
    assert generate_topology(3, tuple(s.opens)).opens == s.opens


def test_sierpinski_shape():
    s = sierpinski_space()
    assert sorted(s.opens) == [0, 2, 3]
    assert s.closure(1) == 1 and s.closure(2) == 3
    assert s.interior(1) == 0
    assert not s.is_dense(1) and s.is_dense(2)


def test_predicates_on_discrete_and_sierpinski():
    d = space_predicates(discrete_space(3))
    assert d.t2 and d.zero_dimensional and d.discrete and d.compact
    s = space_predicates(sierpinski_space())
    assert not s.t2 and not s.zero_dimensional
    assert s.extremally_disconnected


def test_finite_t2_forces_discrete():
    for n in range(5):
        for s in enumerate_topologies(n):
            p = space_predicates(s)
            assert p.t2 == p.discrete


def test_clopen_algebra_of_discrete_space():
    alg = clopen_algebra(discrete_space(2))
    assert sorted(alg.elements) == [0, 1, 2, 3]
    assert clopen_algebra(sierpinski_space()).elements == (0, 3)


def test_regular_closed_matches_brute_force_everywhere():
    for n in range(4):
        for s in enumerate_topologies(n):
            alg = regular_closed_algebra(s)
            assert tuple(sorted(alg.elements)) == regular_closed_bruteforce(s)


def test_rc_algebra_operations_on_sierpinski():
    s = sierpinski_space()
    assert regular_closed_bruteforce(s) == (0, 3)
    alg = regular_closed_algebra(s)
    assert alg.complement(3) == 0 and alg.join(0, 3) == 3


def test_rc_complement_is_closure_of_set_complement():
    s = generate_topology(3, (1, 6))
    alg = regular_closed_algebra(s)
    for f in alg.elements:
        assert alg.complement(f) == s.closure(s.full_mask ^ f)
        assert alg.meet(f, alg.complement(f)) == alg.zero


def test_space_map_continuity():
    s = sierpinski_space()
    d = discrete_space(2)
    # 1 is the open point; any map out of a discrete source is continuous
    for f in all_point_maps(d, s):
        assert f.is_continuous
    const = SpaceMap(s, d, (0, 0))
    assert const.is_continuous
    split = SpaceMap(s, d, (0, 1))
    assert not split.is_continuous


def test_map_validation():
    with pytest.raises(PreconditionError):
        SpaceMap(discrete_space(2), discrete_space(2), (0, 5))
    with pytest.raises(PreconditionError):
        SpaceMap(discrete_space(2), discrete_space(2), (0,))


def test_homeomorphism_and_inverse():
    d = discrete_space(3)
    swap = SpaceMap(d, d, (2, 1, 0))
    assert swap.is_homeomorphism()
    assert compose_maps(swap.inverse(), swap) == identity_map(d)


def test_embedding_of_subspace():
    s = generate_topology(3, (3,))
    sub, points = s.subspace(0b011)
    emb = SpaceMap(sub, s, points)
    assert emb.is_embedding()
    assert emb.image_mask() == 0b011


def test_co_on_map_contravariance():
    x, y = discrete_space(2), discrete_space(3)
    f = SpaceMap(x, y, (0, 2))
    h = co_on_map(f)
    assert h.domain == clopen_algebra(y) and h.codomain == clopen_algebra(x)
    assert h.table[0b101] == 0b11
    assert co_on_map(identity_map(y)) == identity_hom(clopen_algebra(y))


def test_dense_transfer_isos():
    s = sierpinski_space()
    restrict, extend = dense_transfer(s, 0b10)
    from sdlab.boolalg import compose_homs

    assert compose_homs(extend, restrict) == identity_hom(restrict.domain)
    assert compose_homs(restrict, extend) == identity_hom(restrict.codomain)
    with pytest.raises(NotDenseError):
        dense_transfer(s, 0b01)


def test_dense_transfer_on_all_small_spaces():
    for n in range(4):
        for s in enumerate_topologies(n):
            for mask in range(1 << n):
                if not s.is_dense(mask):
                    continue
                restrict, extend = dense_transfer(s, mask)
                from sdlab.boolalg import compose_homs

                assert compose_homs(extend, restrict) == identity_hom(restrict.domain)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=7))
@settings(max_examples=40, deadline=None)
def test_closure_is_a_closure_operator(a, b):
    s = generate_topology(3, (1, 6))
    assert s.closure(0) == 0
    assert s.closure(a) | s.closure(b) == s.closure(a | b)
    assert s.closure(s.closure(a)) == s.closure(a)
    assert a | s.closure(a) == s.closure(a)


@given(st.integers(min_value=0, max_value=7))
@settings(max_examples=30, deadline=None)
def test_interior_is_dual_to_closure(m):
    s = generate_topology(3, (3, 4))
    assert s.interior(m) == s.full_mask ^ s.closure(s.full_mask ^ m)
