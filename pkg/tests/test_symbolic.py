"""Cylinder elements over the binary stream carrier and the parity extension."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdlab.errors import EmptyElementError, PreconditionError, ZeroPointError
from sdlab.symbolic import (
    CYL_ONE,
    CYL_ZERO,
    EXT_ONE,
    EXT_U,
    EXT_ZERO,
    CylElem,
    all_cyl_elems,
    certificate_valid,
    cyl_complement,
    cyl_from_strings,
    cyl_join,
    cyl_leq,
    cyl_meet,
    cyl_meets_U,
    cyl_meets_coU,
    cyl_member,
    cyl_symdiff,
    default_space,
    density_witness,
    dz_failure_certificate,
    ext_complement,
    ext_embed,
    ext_equal,
    ext_is_cylinder,
    ext_join,
    ext_leq,
    ext_meet,
    ext_member,
    least_one_cell,
    parity_U_membership,
    random_cyl_elem,
    separating_pair,
    symbolic_density_suite,
    symbolic_dz_verdict,
    t_equal_witness_check,
    zero_cell,
    zero_point_obstruction,
)


def test_canonical_width_reduction():
    # 10 and 11 agree after dropping the second coordinate
    e = cyl_from_strings(2, ["10", "11"])
    assert e == cyl_from_strings(1, ["1"])
    assert e.width == 1


def test_zero_and_one_constants():
    assert CYL_ZERO.width == 0 and CYL_ZERO.minterms == frozenset()
    assert CYL_ONE.minterms == frozenset({0})
    assert cyl_complement(CYL_ZERO) == CYL_ONE


def test_bad_minterm_strings_rejected():
    with pytest.raises(PreconditionError):
        cyl_from_strings(2, ["1"])
    with pytest.raises(PreconditionError):
        cyl_from_strings(1, ["2"])


def test_meet_join_standard_example():
    e1 = cyl_from_strings(1, ["1"])
    e2 = cyl_from_strings(2, ["10", "11"])
    assert cyl_meet(e1, e2) == e1
    assert cyl_join(e1, e2) == e1
    e3 = cyl_from_strings(2, ["01"])
    assert cyl_meet(e1, e3) == CYL_ZERO
    assert cyl_symdiff(e1, e1) == CYL_ZERO
    assert cyl_leq(e3, cyl_from_strings(2, ["01", "11"]))


def test_membership_by_restriction():
    e = cyl_from_strings(2, ["10"])
    assert cyl_member(frozenset({0}), e)
    assert not cyl_member(frozenset({1}), e)
    assert not cyl_member(frozenset({0, 1}), e)
    assert cyl_member(frozenset({0, 5}), e)


def test_density_witness_examples():
    space = default_space()
    assert density_witness(cyl_from_strings(1, ["1"]), space) == frozenset({0})
    # the minimal point of "0" is the excluded zero stream; the walk bumps
    # the next coordinate instead
    assert density_witness(cyl_from_strings(1, ["0"]), space) == frozenset({1})
    with pytest.raises(EmptyElementError):
        density_witness(CYL_ZERO, space)


def test_density_suite_runs_clean():
    found, total = symbolic_density_suite(seed=0, cases=50)
    assert found == total == 50


def test_parity_membership():
    assert parity_U_membership(frozenset({0}))
    assert parity_U_membership(frozenset({2, 3}))
    assert not parity_U_membership(frozenset({1, 2}))
    with pytest.raises(ZeroPointError):
        parity_U_membership(frozenset())


def test_cell_constructions():
    c = least_one_cell(3)
    assert c.width == 4 and c.minterms == frozenset({8})
    z = zero_cell(3)
    assert z.width == 3 and z.minterms == frozenset({0})
    assert cyl_meet(c, least_one_cell(1)) == CYL_ZERO


def test_cyl_meets_parity_sides():
    assert cyl_meets_U(least_one_cell(0)) and not cyl_meets_coU(least_one_cell(0))
    assert cyl_meets_coU(least_one_cell(1)) and not cyl_meets_U(least_one_cell(1))
    # the all-zero cell meets both sides further out
    assert cyl_meets_U(zero_cell(2)) and cyl_meets_coU(zero_cell(2))


def test_ext_algebra_constants_and_embedding():
    assert ext_equal(ext_embed(CYL_ZERO), EXT_ZERO)
    assert ext_equal(ext_embed(CYL_ONE), EXT_ONE)
    assert ext_equal(ext_complement(EXT_U), ext_meet(EXT_ONE, ext_complement(EXT_U)))
    assert not ext_equal(EXT_U, EXT_ZERO)
    assert not ext_equal(EXT_U, EXT_ONE)


def test_ext_membership_splits_on_parity():
    assert ext_member(frozenset({0}), EXT_U)
    assert not ext_member(frozenset({1}), EXT_U)
    e = ext_embed(cyl_from_strings(1, ["1"]))
    assert ext_member(frozenset({0}), e)
    assert ext_member(frozenset({0, 1}), e)


def test_U_is_not_a_cylinder():
    assert not ext_is_cylinder(EXT_U)
    assert ext_is_cylinder(ext_embed(cyl_from_strings(2, ["01"])))


def test_separating_pair_frozen_instance():
    pair = separating_pair(2)
    assert pair.in_U == frozenset({4})
    assert pair.out_U == frozenset({3})
    assert pair.agreeing_width == 3
    assert parity_U_membership(pair.in_U)
    assert not parity_U_membership(pair.out_U)


def test_separating_pair_agrees_below_bound():
    pair = separating_pair(4)
    for e in all_cyl_elems(3):
        assert cyl_member(pair.in_U, e) == cyl_member(pair.out_U, e)


def test_zero_point_obstruction():
    assert zero_point_obstruction(width_bound=6)


def test_t_equal_witnesses():
    assert t_equal_witness_check(seed=1, samples=25)


def test_certificate_validates_and_is_deterministic():
    cert1 = dz_failure_certificate(bound=4, seed=0)
    cert2 = dz_failure_certificate(bound=4, seed=0)
    assert cert1 == cert2
    assert certificate_valid(cert1)
    assert cert1.pair.in_U == frozenset({6})
    assert cert1.pair.out_U == frozenset({5})


def test_verdicts():
    verdict, cert = symbolic_dz_verdict("cylinder")
    assert verdict == "fail" and certificate_valid(cert)
    verdict2, cert2 = symbolic_dz_verdict("extension")
    assert verdict2 == "undetermined" and cert2 is None
    with pytest.raises(PreconditionError):
        symbolic_dz_verdict("nonsense")


small_elems = st.sampled_from(all_cyl_elems(3))


@given(small_elems, small_elems)
@settings(max_examples=60, deadline=None)
def test_de_morgan_for_cylinders(a, b):
    assert cyl_complement(cyl_meet(a, b)) == cyl_join(cyl_complement(a), cyl_complement(b))


@given(small_elems, small_elems, st.integers(min_value=0, max_value=200))
@settings(max_examples=60, deadline=None)
def test_membership_is_a_lattice_hom(a, b, salt):
    rng = random.Random(salt)
    p = frozenset(i for i in range(6) if rng.random() < 0.5) or frozenset({0})
    assert cyl_member(p, cyl_meet(a, b)) == (cyl_member(p, a) and cyl_member(p, b))
    assert cyl_member(p, cyl_join(a, b)) == (cyl_member(p, a) or cyl_member(p, b))
    assert cyl_member(p, cyl_complement(a)) == (not cyl_member(p, a))


@given(small_elems)
@settings(max_examples=40, deadline=None)
def test_ext_embed_respects_leq(a):
    assert ext_leq(ext_embed(a), EXT_ONE)
    assert ext_leq(EXT_ZERO, ext_embed(a))
    assert ext_equal(ext_join(ext_embed(a), ext_embed(a)), ext_embed(a))


def test_random_generators_are_seed_stable():
    r1 = random_cyl_elem(random.Random(7))
    r2 = random_cyl_elem(random.Random(7))
    assert r1 == r2
