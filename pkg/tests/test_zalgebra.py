"""Point-family instances: density, traces, the (Dw) condition, duality."""

import pytest

from sdlab.boolalg import FinBoolAlg, SetSubalgebra, full_power_subalgebra, identity_hom
from sdlab.dualities import stone_space
from sdlab.errors import (
    InvalidMorphismError,
    NotSubalgebraError,
    NotZAlgebraError,
    PreconditionError,
)
from sdlab.finspace import discrete_space, generate_topology
from sdlab.zalgebra import (
    DZAMorphism,
    check_Dw,
    compose_dza,
    dza_morphism_from_phi,
    enumerate_dza_morphisms,
    full_instance,
    functor_F,
    functor_F_on_map,
    functor_G,
    functor_G_on_mor,
    generated_topology_on_points,
    h_hat_component,
    identity_dza,
    is_dz_algebra,
    is_dza_isomorphism,
    is_z_algebra,
    s_prime_component,
    t_compare,
    t_coarser,
    trace_image,
    trace_map,
    z_instance,
)


def test_point_indices_are_canonicalized():
    inst = z_instance(FinBoolAlg(2), [1, 0])
    assert inst.point_idx == (0, 1)
    with pytest.raises(PreconditionError):
        type(inst)(FinBoolAlg(2), (1, 0))


def test_points_accept_homs_or_indices():
    alg = FinBoolAlg(2)
    st = stone_space(alg)
    by_idx = z_instance(alg, [0, 1])
    by_hom = z_instance(alg, st.points)
    assert by_idx == by_hom


def test_full_instance_is_z_and_dz():
    inst = full_instance(FinBoolAlg(2))
    assert is_z_algebra(inst).holds
    assert is_dz_algebra(inst).holds


def test_dropping_a_point_of_a_power_algebra_kills_density():
    inst = z_instance(FinBoolAlg(2), [0])
    chk = is_z_algebra(inst)
    assert not chk.holds
    assert chk.witness == 1  # a nonzero element with an empty trace
    assert not chk.dense_in_stone


def test_vacuous_instance_is_flagged():
    inst = z_instance(FinBoolAlg(0), [])
    chk = is_z_algebra(inst)
    assert chk.holds and chk.vacuous


def test_trace_table_of_full_two_atom_instance():
    inst = full_instance(FinBoolAlg(2))
    tm = trace_map(inst)
    # the trace of an element records which points send it to 1
    assert tm.table[0] == 0
    assert tm.is_mono
    assert sorted(trace_image(inst)) == [0, 1, 2, 3]


def test_z_iff_trace_mono():
    for alg in (FinBoolAlg(1), FinBoolAlg(2)):
        n = len(stone_space(alg).points)
        for mask in range(1 << n):
            pts = [i for i in range(n) if mask >> i & 1]
            inst = z_instance(alg, pts)
            assert is_z_algebra(inst).holds == trace_map(inst).is_mono


def test_generated_topology_matches_subspace():
    inst = full_instance(FinBoolAlg(2))
    assert generated_topology_on_points(inst) == inst.subspace


def test_t_compare_example():
    amb = FinBoolAlg(2)
    small = frozenset({0, 3})
    big = frozenset({0, 1, 2, 3})
    rec = t_compare(small, big, amb)
    assert rec.a_coarser_b and not rec.b_coarser_a and not rec.t_equal
    assert t_coarser(small, small, amb)


def test_t_compare_rejects_non_subalgebras():
    with pytest.raises(NotSubalgebraError):
        t_compare(frozenset({0, 1}), frozenset({0, 3}), FinBoolAlg(2))


def test_dw_holds_on_full_instances():
    for n in range(3):
        rec = check_Dw(full_instance(FinBoolAlg(n)))
        assert rec.holds and rec.offender is None


def test_dz_equals_dw_on_all_small_instances():
    for alg in (FinBoolAlg(1), FinBoolAlg(2), FinBoolAlg(3)):
        n = len(stone_space(alg).points)
        for mask in range(1 << n):
            inst = z_instance(alg, [i for i in range(n) if mask >> i & 1])
            if not is_z_algebra(inst).holds:
                continue
            assert is_dz_algebra(inst).holds == check_Dw(inst).holds


def test_functor_F_of_discrete_space():
    x = discrete_space(2)
    inst = functor_F(x)
    assert sorted(inst.algebra.members) == [0, 1, 2, 3]
    assert is_dz_algebra(inst).holds


def test_functor_F_rejects_non_zero_dimensional():
    with pytest.raises(PreconditionError):
        functor_F(generate_topology(2, (1,)))


def test_functor_G_recovers_the_space():
    x = discrete_space(3)
    inst = functor_F(x)
    back = functor_G(inst)
    assert back.point_count == 3
    assert back.opens == x.opens


def test_functor_G_requires_z():
    inst = z_instance(FinBoolAlg(2), [0])
    with pytest.raises(NotZAlgebraError):
        functor_G(inst)


def test_round_trip_components_are_isos():
    for n in range(3):
        inst = functor_F(discrete_space(n))
        assert is_dza_isomorphism(s_prime_component(inst))
        h = h_hat_component(discrete_space(n))
        assert h.is_homeomorphism()


def test_morphism_validation_catches_wrong_point_map():
    a = full_instance(FinBoolAlg(2))
    phi = identity_hom(a.algebra)
    with pytest.raises(InvalidMorphismError):
        DZAMorphism(a, a, phi, (1, 0))


def test_dza_morphism_from_phi_and_composition():
    a = full_instance(FinBoolAlg(2))
    m = dza_morphism_from_phi(a, a, identity_hom(a.algebra))
    assert m == identity_dza(a)
    assert compose_dza(m, m) == m


def test_enumerate_dza_morphisms_counts():
    a = full_instance(FinBoolAlg(1))
    b = full_instance(FinBoolAlg(2))
    # one morphism per hom whose transported points stay inside the family
    assert len(enumerate_dza_morphisms(a, a)) == 1
    assert len(enumerate_dza_morphisms(b, b)) == 4
    assert len(enumerate_dza_morphisms(a, b)) == 1
    assert len(enumerate_dza_morphisms(b, a)) == 2


def test_functor_F_on_map_then_G_round_trip():
    x, y = discrete_space(2), discrete_space(2)
    from sdlab.finspace import SpaceMap

    f = SpaceMap(x, y, (1, 0))
    m = functor_F_on_map(f)
    g = functor_G_on_mor(m)
    assert g.mapping == f.mapping
