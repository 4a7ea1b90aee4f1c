"""Compactifications as square objects, their dualities, and the Dwinger side."""

import pytest

from sdlab.boolalg import SetSubalgebra, make_power_algebra
from sdlab.compactify import (
    Compactification,
    SymbolicCompactification,
    admissible_algebras,
    banaschewski_b0,
    banaschewski_extension_check,
    compactification_equiv,
    compose_zcomp,
    dwinger_delta,
    dwinger_delta_prime,
    dwinger_order,
    ed_comp_check,
    enumerate_zcomp_morphisms,
    find_zcomp_isomorphism,
    functor_Phi,
    functor_Phi_on_mor,
    functor_PhiPrime,
    functor_Psi,
    functor_Psi_on_mor,
    functor_PsiPrime,
    identity_compactification,
    identity_zcomp,
    is_zcomp_isomorphism,
    kappa_component,
    pullback_algebra,
    relabeled_compactifications,
    search_iso_not_equiv,
    s_dprime_component,
    symbolic_cantor,
    symbolic_compactification_equiv,
    symbolic_dwinger_chain,
    symbolic_extension_target,
    upsilon_component,
    xi_component,
    ZCompMorphism,
)
from sdlab.errors import (
    BoundExceededError,
    InvalidMorphismError,
    NotAdmissibleError,
    PreconditionError,
)
from sdlab.finspace import FinTopSpace, SpaceMap, discrete_space, identity_map
from sdlab.symbolic import EXT_U, separating_pair
from sdlab.zalgebra import full_instance, is_dza_isomorphism
from sdlab.zmaps import functor_K, is_mbool_isomorphism

SIER = FinTopSpace(2, frozenset({0, 2, 3}))
D1 = discrete_space(1)
D2 = discrete_space(2)


def b0_d2():
    return banaschewski_b0(D2)


def test_validity_flags_breakdown():
    # dense fails: one point cannot close up to two
    bad = Compactification(D1, D2, SpaceMap(D1, D2, (0,)))
    assert bad.embedding_flag and bad.target_flag and not bad.dense_flag
    assert not bad.is_valid
    assert identity_compactification(D2).is_valid
    # a Sierpinski target fails the Hausdorff leg
    assert not identity_compactification(SIER).is_valid


def test_constructor_checks_endpoints():
    with pytest.raises(InvalidMorphismError):
        Compactification(D1, D2, identity_map(D2))


def test_b0_of_discrete_is_a_relabeling():
    c = b0_d2()
    assert c.is_valid
    assert c.target.point_count == 2
    assert c.embedding.is_homeomorphism()
    assert sorted(pullback_algebra(c).members) == [0, 1, 2, 3]


def test_b0_requires_zero_dimensional_hausdorff():
    with pytest.raises(PreconditionError):
        banaschewski_b0(SIER)


def test_morphism_validation():
    c = b0_d2()
    with pytest.raises(InvalidMorphismError, match="source map endpoints"):
        ZCompMorphism(c, c, SpaceMap(D1, D2, (0,)), identity_map(c.target))
    with pytest.raises(InvalidMorphismError, match="square"):
        ZCompMorphism(c, c, identity_map(D2), SpaceMap(c.target, c.target, (1, 0)))
    cs = identity_compactification(SIER)
    swap = SpaceMap(SIER, SIER, (1, 0))
    with pytest.raises(InvalidMorphismError, match="continuous"):
        ZCompMorphism(cs, cs, swap, swap)


def test_morphism_enumeration_and_isos():
    c = b0_d2()
    ms = enumerate_zcomp_morphisms(c, c)
    assert len(ms) == 4
    assert sum(is_zcomp_isomorphism(m) for m in ms) == 2
    with pytest.raises(BoundExceededError):
        enumerate_zcomp_morphisms(c, c, bound=3)


def test_identity_and_composition():
    c = b0_d2()
    i = identity_zcomp(c)
    assert is_zcomp_isomorphism(i)
    for m in enumerate_zcomp_morphisms(c, c):
        assert compose_zcomp(m, i).f == m.f and compose_zcomp(i, m).g == m.g
    other = identity_compactification(D2)
    with pytest.raises(InvalidMorphismError):
        compose_zcomp(i, identity_zcomp(other))


def test_phi_needs_a_valid_object():
    bad = Compactification(D1, D2, SpaceMap(D1, D2, (0,)))
    with pytest.raises(PreconditionError):
        functor_Phi(bad)


def test_phi_separates_points():
    inst = functor_Phi(b0_d2())
    assert len(inst.point_idx) == 2
    assert len(inst.algebra.atoms()) == 2


def test_phi_on_identity_is_iso():
    m = functor_Phi_on_mor(identity_zcomp(b0_d2()))
    assert is_dza_isomorphism(m)


def test_psi_of_full_instance():
    inst = full_instance(make_power_algebra(2))
    c = functor_Psi(inst)
    assert c.is_valid
    assert c.source.point_count == len(inst.point_idx)
    m = functor_Psi_on_mor(functor_Phi_on_mor(identity_zcomp(b0_d2())))
    assert is_zcomp_isomorphism(m)


def test_round_trip_components_are_isos():
    c = b0_d2()
    k = kappa_component(c)
    assert k.src is c and is_zcomp_isomorphism(k)
    assert compactification_equiv(c, k.tgt)[0]
    x = xi_component(c)
    assert x.tgt == functor_PsiPrime(functor_PhiPrime(c))
    assert is_zcomp_isomorphism(x)


def test_algebra_side_components_are_isos():
    inst = full_instance(make_power_algebra(2))
    assert is_dza_isomorphism(s_dprime_component(inst))
    zm = functor_K(make_power_algebra(2))
    assert is_mbool_isomorphism(upsilon_component(zm))


def test_admissible_algebras_collapse_for_discrete():
    out = admissible_algebras(discrete_space(3))
    assert len(out) == 1
    assert sorted(out[0].members) == list(range(8))
    empty = admissible_algebras(discrete_space(0))
    assert len(empty) == 1 and empty[0].members == frozenset({0})


def test_dwinger_delta_round_trip():
    full = SetSubalgebra(2, frozenset(range(4)))
    c = dwinger_delta(full, D2)
    assert c.is_valid
    assert dwinger_delta_prime(c) == full
    with pytest.raises(PreconditionError):
        dwinger_delta(SetSubalgebra(3, frozenset(range(8))), D2)
    with pytest.raises(NotAdmissibleError):
        dwinger_delta(SetSubalgebra(2, frozenset({0, 3})), D2)


def test_dwinger_order_on_the_full_chain():
    full = SetSubalgebra(2, frozenset(range(4)))
    w = dwinger_order(full, full, D2)
    assert w.holds
    with pytest.raises(PreconditionError):
        dwinger_order(full, SetSubalgebra(2, frozenset({0, 3})), D2)


def test_equivalence_across_relabelings():
    c = b0_d2()
    rels = list(relabeled_compactifications(c))
    assert len(rels) == 2 and all(r.is_valid for r in rels)
    for r in rels:
        ok, f = compactification_equiv(c, r)
        assert ok and f.is_homeomorphism()
        assert find_zcomp_isomorphism(c, r) is not None
    with pytest.raises(PreconditionError):
        compactification_equiv(c, identity_compactification(discrete_space(3)))


def test_relabeling_sweep_is_bounded():
    big = identity_compactification(discrete_space(6))
    with pytest.raises(BoundExceededError):
        list(relabeled_compactifications(big))


def test_iso_not_equiv_detector_stays_empty():
    assert search_iso_not_equiv(relabeled_compactifications(b0_d2())) == ()


def test_banaschewski_extension():
    f = SpaceMap(D1, D2, (0,))
    ext = banaschewski_extension_check(f, b0_d2())
    assert ext.square_commutes and ext.unique
    assert ext.g.is_continuous
    with pytest.raises(PreconditionError):
        banaschewski_extension_check(SpaceMap(D1, D1, (0,)), b0_d2())


def test_ed_comp_over_discrete_spaces():
    for n in range(4):
        assert ed_comp_check(discrete_space(n))
    with pytest.raises(PreconditionError):
        ed_comp_check(SIER)


def test_symbolic_targets():
    assert symbolic_cantor().kind == "cylinder"
    assert symbolic_extension_target().kind == "extension"
    with pytest.raises(PreconditionError):
        SymbolicCompactification("bogus")
    with pytest.raises(PreconditionError):
        symbolic_cantor().approx(frozenset({0}), [EXT_U])


def test_symbolic_chain_record():
    rec = symbolic_dwinger_chain(seed=0, samples=20)
    assert rec.inclusion_strict
    assert rec.t_equal
    assert rec.both_admissible
    assert rec.restriction_agrees
    assert rec.delta_prime_delta_identity


def test_symbolic_equivalence_verdicts():
    same = symbolic_compactification_equiv(symbolic_cantor(), symbolic_cantor())
    assert same.equivalent and same.pair is None
    crossed = symbolic_compactification_equiv(
        symbolic_cantor(), symbolic_extension_target()
    )
    assert not crossed.equivalent
    assert crossed.pair == separating_pair(8)
