"""Hom-space and preimage-functor behaviour on both classical sides."""

import pytest

from sdlab.boolalg import (
    FinBoolAlg,
    SetSubalgebra,
    compose_homs,
    enumerate_homs,
    hom_from_atom_images,
    identity_hom,
)
from sdlab.dualities import (
    check_adjoint_atom,
    clopen_of_subspace,
    power_of_stone_points,
    stone_map,
    stone_on_hom,
    stone_space,
    t_component,
    tarski_At,
    tarski_P,
    tarski_epsilon,
    tarski_epsilon_inverse,
    tarski_eta,
    tarski_units,
)
from sdlab.errors import PreconditionError
from sdlab.finspace import (
    SpaceMap,
    compose_maps,
    discrete_space,
    sierpinski_space,
    space_predicates,
)


def test_stone_space_of_power_algebra_is_discrete():
    for n in range(4):
        st = stone_space(FinBoolAlg(n))
        assert st.space.point_count == n
        assert space_predicates(st.space).discrete


def test_stone_space_of_subalgebra():
    sub = SetSubalgebra(3, frozenset({0, 1, 6, 7}))
    st = stone_space(sub)
    assert st.space.point_count == 2


def test_stone_map_is_iso():
    for n in range(4):
        s = stone_map(FinBoolAlg(n))
        assert s.is_iso()
    s = stone_map(SetSubalgebra(3, frozenset({0, 1, 6, 7})))
    assert s.is_iso()


def test_base_map_of_two_atoms_explicitly():
    alg = FinBoolAlg(2)
    st = stone_space(alg)
    s = stone_map(alg)
    # each element lands on the set of homs sending it to 1
    for a in alg.elements:
        for i, y in enumerate(st.points):
            assert bool(s.table[a] >> i & 1) == (y.table[a] == 1)


def test_stone_on_hom_contravariance():
    a, b, c = FinBoolAlg(1), FinBoolAlg(2), FinBoolAlg(2)
    for phi in enumerate_homs(a, b):
        for psi in enumerate_homs(b, c):
            lhs = stone_on_hom(compose_homs(psi, phi))
            rhs = compose_maps(stone_on_hom(phi), stone_on_hom(psi))
            assert lhs == rhs
    assert stone_on_hom(identity_hom(b)) == SpaceMap(
        stone_space(b).space, stone_space(b).space, (0, 1)
    )


def test_t_component_is_homeomorphism():
    for n in range(4):
        t = t_component(discrete_space(n))
        assert t.is_homeomorphism()


def test_t_component_rejects_non_hausdorff():
    with pytest.raises(PreconditionError):
        t_component(sierpinski_space())


def test_naturality_of_base_map():
    a, b = FinBoolAlg(2), FinBoolAlg(2)
    for phi in enumerate_homs(a, b):
        s_a, s_b = stone_map(a), stone_map(b)
        from sdlab.finspace import co_on_map

        lhs = compose_homs(s_b, phi)
        rhs = compose_homs(co_on_map(stone_on_hom(phi)), s_a)
        assert lhs == rhs


def test_tarski_P_preimage_table():
    h = tarski_P((1, 0, 1), 3, 2)
    # f sends points 0,2 to 1 and point 1 to 0
    assert h.table[0b10] == 0b101
    assert h.table[0b01] == 0b010
    assert h.is_valid_hom and h.is_complete


def test_tarski_P_rejects_bad_mapping():
    with pytest.raises(PreconditionError):
        tarski_P((5,), 1, 2)
    with pytest.raises(PreconditionError):
        tarski_P((0, 0), 1, 2)


def test_tarski_At_of_preimage_recovers_the_map():
    mapping = (1, 0, 1)
    h = tarski_P(mapping, 3, 2)
    at = tarski_At(h)
    eta_dom = tarski_eta(3)
    eta_cod = tarski_eta(2)
    for x, img in enumerate(mapping):
        assert at[eta_dom[x]] == eta_cod[img]


def test_adjoint_atom_identity_for_all_small_homs():
    for a in range(3):
        for b in range(3):
            for sigma in enumerate_homs(FinBoolAlg(a), FinBoolAlg(b)):
                assert check_adjoint_atom(sigma).holds


def test_adjoint_atom_counterexample_reporting():
    # a valid hom never fails; exercise the record shape on a passing case
    sigma = identity_hom(FinBoolAlg(1))
    rec = check_adjoint_atom(sigma)
    assert rec.holds and rec.counterexample is None


def test_epsilon_is_an_isomorphism():
    for alg in (FinBoolAlg(3), SetSubalgebra(3, frozenset({0, 1, 6, 7}))):
        eps = tarski_epsilon(alg)
        assert eps.is_iso()
        inv = tarski_epsilon_inverse(alg)
        assert compose_homs(inv, eps) == identity_hom(alg)


def test_units_package():
    eta, eps = tarski_units(FinBoolAlg(2))
    assert eta == {0: 1, 1: 2}
    assert eps.domain == FinBoolAlg(2)


def test_power_of_stone_points_and_subspace_clopens():
    alg = FinBoolAlg(2)
    assert power_of_stone_points(alg) == FinBoolAlg(2)
    sub = clopen_of_subspace(alg, (0,))
    assert sorted(sub.members) == [0, 1]
