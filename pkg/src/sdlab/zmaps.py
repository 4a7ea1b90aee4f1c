"""Boolean z-maps, mz-maps, the category of map pairs, and both recovery tiers.

A z-map is a mono into an atomic algebra whose every atom is a meet of image
elements.  Pairing such maps with hom pairs (phi, sigma) gives a category
equivalent to the dz-algebra one and dual to zero-dimensional Hausdorff
spaces.  The compact and check-hom restrictions recover the classical Stone
and Tarski dualities; those functors live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AxiomViolationError,
    InvalidHomError,
    InvalidMorphismError,
    NotMonoError,
    PreconditionError,
    WrongSubcategoryError,
)
from .boolalg import (
    BoolAlg,
    BoolHom,
    FinBoolAlg,
    alpha_family,
    check_hom,
    compose_homs,
    enumerate_homs,
    identity_hom,
    subalgebra_carriers,
)
from .dualities import stone_on_hom, stone_space, tarski_At, tarski_P, tarski_P_of_map
from .finspace import FinTopSpace, SpaceMap, clopen_algebra, co_on_map, space_predicates
from .zalgebra import (
    DZAMorphism,
    ZAlgebraInstance,
    check_Dw,
    full_instance,
    functor_F,
    functor_F_on_map,
    hat_positions,
    is_dz_algebra,
    is_z_algebra,
    t_compare,
    trace_map,
    z_instance,
)


@dataclass(frozen=True)
class ZMapInstance:
    """A hom A -> B together with its atom-indexed hom family X_alpha."""

    alpha: BoolHom

    def __post_init__(self) -> None:
        if not self.alpha.is_valid_hom:
            raise InvalidHomError("a z-map candidate must be a valid hom")

    @cached_property
    def family(self) -> tuple[tuple[BoolHom, ...], dict[int, int]]:
        """(deduplicated X_alpha, atom of B -> family position)."""
        return alpha_family(self.alpha)

    @cached_property
    def instance(self) -> ZAlgebraInstance:
        """(A, X_alpha) as a point-set instance over the Stone space of A."""
        homs, _ = self.family
        return z_instance(self.alpha.domain, homs)

    @cached_property
    def atom_to_position(self) -> dict[int, int]:
        """Atom of B -> position of its hom inside the sorted instance points."""
        homs, fam_idx = self.family
        return {x: self.instance.position_of_hom(homs[j]) for x, j in fam_idx.items()}

    @cached_property
    def position_atoms(self) -> dict[int, tuple[int, ...]]:
        """Back-pointers: instance position -> the atoms of B generating it."""
        out: dict[int, list[int]] = {}
        for x, pos in self.atom_to_position.items():
            out.setdefault(pos, []).append(x)
        return {pos: tuple(sorted(xs)) for pos, xs in out.items()}

    def __repr__(self) -> str:
        return f"ZMapInstance({self.alpha.domain!r} -> {self.alpha.codomain!r})"


@dataclass(frozen=True)
class ZMapCheck:
    holds: bool
    witness_atom: int | None
    witness_meet: int | None


def is_z_map(zm: ZMapInstance) -> ZMapCheck:
    """Each atom of the codomain must be the meet of the image elements above it."""
    alpha = zm.alpha
    if not alpha.is_mono:
        raise NotMonoError("z-maps are monomorphisms by definition")
    dom, cod = alpha.domain, alpha.codomain
    for x in cod.atoms():
        m = cod.meet_all(alpha.table[a] for a in dom.elements if cod.leq(x, alpha.table[a]))
        if m != x:
            return ZMapCheck(False, x, m)
    return ZMapCheck(True, None, None)


@dataclass(frozen=True)
class MZCheck:
    holds: bool
    z_holds: bool
    clopen_witness: int | None


def is_mz_map(zm: ZMapInstance) -> MZCheck:
    """mz: the clopens of the subspace on X_alpha all arise as traces."""
    z = is_z_map(zm)
    if not z.holds:
        return MZCheck(False, False, None)
    dz = is_dz_algebra(zm.instance)
    return MZCheck(dz.holds, True, dz.witness)


@dataclass(frozen=True)
class MZSubalgebraCheck:
    holds: bool
    offender: frozenset[int] | None


def mz_subalgebra_route(zm: ZMapInstance) -> MZSubalgebraCheck:
    """Independent mz characterization: every subalgebra of B t-equal to the
    image of alpha is contained in that image."""
    cod = zm.alpha.codomain
    image = frozenset(zm.alpha.image())
    for carrier in subalgebra_carriers(cod):
        if t_compare(carrier, image, cod).t_equal and not carrier <= image:
            return MZSubalgebraCheck(False, carrier)
    return MZSubalgebraCheck(True, None)


# -- morphisms of map pairs ---------------------------------------------------


@dataclass(frozen=True)
class MBoolMorphism:
    """(phi, sigma) with sigma complete and alpha' after phi = sigma after alpha."""

    src: ZMapInstance
    tgt: ZMapInstance
    phi: BoolHom
    sigma: BoolHom

    def __post_init__(self) -> None:
        if self.phi.domain != self.src.alpha.domain or self.phi.codomain != self.tgt.alpha.domain:
            raise InvalidMorphismError("phi must map the source domain to the target domain")
        if self.sigma.domain != self.src.alpha.codomain or self.sigma.codomain != self.tgt.alpha.codomain:
            raise InvalidMorphismError("sigma must map the source codomain to the target codomain")
        if not (self.phi.is_valid_hom and self.sigma.is_valid_hom):
            raise InvalidMorphismError("components must be valid homs")
        if not self.sigma.is_complete:
            raise InvalidMorphismError("sigma must be complete")
        if compose_homs(self.tgt.alpha, self.phi) != compose_homs(self.sigma, self.src.alpha):
            raise InvalidMorphismError("alpha' after phi = sigma after alpha fails")


def identity_mbool(zm: ZMapInstance) -> MBoolMorphism:
    return MBoolMorphism(zm, zm, identity_hom(zm.alpha.domain), identity_hom(zm.alpha.codomain))


def compose_mbool(outer: MBoolMorphism, inner: MBoolMorphism) -> MBoolMorphism:
    if inner.tgt != outer.src:
        raise PreconditionError("morphisms are not composable")
    return MBoolMorphism(
        inner.src,
        outer.tgt,
        compose_homs(outer.phi, inner.phi),
        compose_homs(outer.sigma, inner.sigma),
    )


def enumerate_mbool_morphisms(src: ZMapInstance, tgt: ZMapInstance) -> tuple[MBoolMorphism, ...]:
    out = []
    for phi in enumerate_homs(src.alpha.domain, tgt.alpha.domain):
        for sigma in enumerate_homs(src.alpha.codomain, tgt.alpha.codomain):
            if compose_homs(tgt.alpha, phi) == compose_homs(sigma, src.alpha):
                if sigma.is_complete:
                    out.append(MBoolMorphism(src, tgt, phi, sigma))
    return tuple(out)


def is_mbool_isomorphism(m: MBoolMorphism) -> bool:
    if not (m.phi.is_iso() and m.sigma.is_iso()):
        return False
    try:
        MBoolMorphism(m.tgt, m.src, m.phi.inverse(), m.sigma.inverse())
    except InvalidMorphismError:
        return False
    return True


def f_sigma(m: MBoolMorphism) -> tuple[int, ...]:
    """The point transport X_alpha' -> X_alpha induced by sigma's adjoint atom map.

    Sends the hom generated by an atom x' to the hom generated by At(sigma)(x').
    Well-definedness over representatives of a deduplicated position is
    asserted; for z-maps each position has a single generator.
    """
    at_map = tarski_At(m.sigma)
    values: dict[int, int] = {}
    for xp, j in m.tgt.atom_to_position.items():
        v = m.src.atom_to_position[at_map[xp]]
        if j in values and values[j] != v:
            raise AxiomViolationError("point transport not well defined on a merged position")
        values[j] = v
    return tuple(values[j] for j in range(len(m.tgt.instance.point_idx)))


def f_sigma_map(m: MBoolMorphism) -> SpaceMap:
    return SpaceMap(m.tgt.instance.subspace, m.src.instance.subspace, f_sigma(m))


def preimage_identity_check(m: MBoolMorphism) -> bool:
    """The transport pulls source traces back to target traces of phi-images."""
    fs = f_sigma_map(m)
    src_tr = m.src.instance.trace_table
    tgt_tr = m.tgt.instance.trace_table
    return all(fs.preimage(src_tr[a]) == tgt_tr[m.phi.table[a]] for a in m.phi.domain.elements)


# -- the equivalence with dz-algebras ----------------------------------------


def functor_Fprime(inst: ZAlgebraInstance) -> ZMapInstance:
    """F'(A, X) = the trace map A -> P(X); an mz-map when (A, X) is dz."""
    if not is_dz_algebra(inst).holds:
        raise PreconditionError("F' is defined on dz-algebras")
    zm = ZMapInstance(trace_map(inst))
    if not is_mz_map(zm).holds:
        raise AxiomViolationError("trace map of a dz-algebra must be mz")
    return zm


def functor_Fprime_on_mor(m: DZAMorphism) -> MBoolMorphism:
    """F'(phi, f) = (phi, P(f))."""
    src = functor_Fprime(m.src)
    tgt = functor_Fprime(m.tgt)
    sigma = tarski_P(m.point_map, len(m.tgt.point_idx), len(m.src.point_idx))
    return MBoolMorphism(src, tgt, m.phi, sigma)


def functor_Gprime(zm: ZMapInstance) -> ZAlgebraInstance:
    """G'(alpha) = (CO of the subspace on X_alpha, its hat points)."""
    if not is_mz_map(zm).holds:
        raise PreconditionError("G' is defined on mz-maps")
    return functor_F(zm.instance.subspace)


def functor_Gprime_on_mor(m: MBoolMorphism) -> DZAMorphism:
    """G'(phi, sigma) = (preimage hom of the transport, its hat conjugate)."""
    out = functor_F_on_map(f_sigma_map(m))
    if not preimage_identity_check(m):
        raise AxiomViolationError("transport preimage identity fails")
    return out


# -- the direct duality with spaces ------------------------------------------


def _require_zh(space: FinTopSpace) -> None:
    preds = space_predicates(space)
    if not (preds.t2 and preds.zero_dimensional):
        raise PreconditionError("functor needs a zero-dimensional Hausdorff space")


def functor_frakF(space: FinTopSpace) -> ZMapInstance:
    """The inclusion of the clopen algebra into the full power algebra."""
    _require_zh(space)
    co = clopen_algebra(space)
    incl = BoolHom(co, FinBoolAlg(space.point_count), {u: u for u in co.elements})
    zm = ZMapInstance(incl)
    if not is_mz_map(zm).holds:
        raise AxiomViolationError("the clopen inclusion must be an mz-map")
    return zm


def functor_frakF_on_map(f: SpaceMap) -> MBoolMorphism:
    """frakF(f) = (preimage on clopens, preimage on all sets)."""
    src = functor_frakF(f.cod)
    tgt = functor_frakF(f.dom)
    return MBoolMorphism(src, tgt, co_on_map(f), tarski_P_of_map(f))


def functor_frakG(zm: ZMapInstance) -> FinTopSpace:
    """frakG(alpha) = the subspace on X_alpha."""
    if not is_mz_map(zm).holds:
        raise PreconditionError("frakG is defined on mz-maps")
    return zm.instance.subspace


def functor_frakG_on_mor(m: MBoolMorphism) -> SpaceMap:
    return f_sigma_map(m)


# -- natural components -------------------------------------------------------


def eta_tilde_component(space: FinTopSpace) -> SpaceMap:
    """x -> hat(x), from X to frakG(frakF(X)); a homeomorphism."""
    _require_zh(space)
    target = functor_frakG(functor_frakF(space))
    return SpaceMap(space, target, hat_positions(space))


def _hat_mask_table(zm: ZMapInstance) -> tuple[dict[int, int], int]:
    """For each b of B, the positions (in hat order) of hats of atoms below b."""
    sub = zm.instance.subspace
    pos = hat_positions(sub)
    cod = zm.alpha.codomain
    table = {}
    for b in cod.elements:
        mask = 0
        for x in cod.atoms():
            if cod.leq(x, b):
                mask |= 1 << pos[zm.atom_to_position[x]]
        table[b] = mask
    return table, len(set(pos))


def epsilon_prime_component(zm: ZMapInstance) -> MBoolMorphism:
    """eps'_alpha: alpha -> F'(G'(alpha)), trace corestriction with the hat count map."""
    tgt = functor_Fprime(functor_Gprime(zm))
    phi = BoolHom(zm.alpha.domain, tgt.alpha.domain, dict(zm.instance.trace_table))
    hat_table, n_hats = _hat_mask_table(zm)
    sigma = BoolHom(zm.alpha.codomain, FinBoolAlg(n_hats), hat_table)
    return MBoolMorphism(zm, tgt, phi, sigma)


def epsilon_tilde_component(zm: ZMapInstance) -> MBoolMorphism:
    """eps~_alpha: alpha -> frakF(frakG(alpha)), with atoms-below masks on positions."""
    tgt = functor_frakF(functor_frakG(zm))
    phi = BoolHom(zm.alpha.domain, tgt.alpha.domain, dict(zm.instance.trace_table))
    cod = zm.alpha.codomain
    table = {}
    for b in cod.elements:
        mask = 0
        for x in cod.atoms():
            if cod.leq(x, b):
                mask |= 1 << zm.atom_to_position[x]
        table[b] = mask
    sigma = BoolHom(cod, FinBoolAlg(len(zm.instance.point_idx)), table)
    return MBoolMorphism(zm, tgt, phi, sigma)


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    compact_dza: bool | None = None
    t_algebra: bool | None = None
    complete_z: bool | None = None
    complete_dz: bool | None = None
    compact_mz: bool | None = None
    t_map: bool | None = None
    complete_mz: bool | None = None


def classify(obj: ZAlgebraInstance | ZMapInstance) -> Classification:
    """Subcategory membership flags.  Finite algebras are complete, so the
    complete_* flags collapse to the plain ones; that degeneracy is the
    documented finite-scale behaviour."""
    if isinstance(obj, ZAlgebraInstance):
        z = is_z_algebra(obj).holds
        dz = z and is_dz_algebra(obj).holds
        all_points = obj.point_idx == tuple(range(len(obj.stone.points)))
        if all_points and not dz and len(obj.algebra.elements) > 1:
            raise AxiomViolationError("a full instance must be dz")
        check_idx = tuple(
            sorted(obj.stone.index_of(check_hom(obj.algebra, x)) for x in obj.algebra.atoms())
        )
        return Classification(
            compact_dza=all_points and dz,
            t_algebra=obj.point_idx == check_idx and dz,
            complete_z=z,
            complete_dz=dz,
        )
    if isinstance(obj, ZMapInstance):
        try:
            z = is_z_map(obj).holds
        except NotMonoError:
            z = False
        mz = z and is_mz_map(obj).holds
        n_all = len(stone_space(obj.alpha.domain).points)
        compact = z and len(obj.instance.point_idx) == n_all
        return Classification(
            compact_mz=compact and mz,
            t_map=obj.alpha == identity_hom(obj.alpha.domain),
            complete_mz=mz,
        )
    raise PreconditionError(f"cannot classify {type(obj).__name__}")


# -- restriction functors recovering the classical dualities ------------------


def functor_E(algebra: BoolAlg) -> ZAlgebraInstance:
    """E(A) = (A, all homs to 2); lands in the compact dz-algebras."""
    return full_instance(algebra)


def functor_E_on_hom(phi: BoolHom) -> DZAMorphism:
    return DZAMorphism(
        full_instance(phi.domain),
        full_instance(phi.codomain),
        phi,
        stone_on_hom(phi).mapping,
    )


def functor_E_inv(inst: ZAlgebraInstance) -> BoolAlg:
    if not classify(inst).compact_dza:
        raise WrongSubcategoryError("E inverse needs a compact dz-algebra")
    return inst.algebra


def functor_E_inv_on_mor(m: DZAMorphism) -> BoolHom:
    functor_E_inv(m.src)
    functor_E_inv(m.tgt)
    if m.point_map != stone_on_hom(m.phi).mapping:
        raise AxiomViolationError("compact morphism point map must be the Stone transport")
    return m.phi


def functor_K(algebra: BoolAlg) -> ZMapInstance:
    """K(A) = the trace map of the full instance; a compact mz-map."""
    return ZMapInstance(trace_map(full_instance(algebra)))


def functor_K_on_hom(phi: BoolHom) -> MBoolMorphism:
    src = functor_K(phi.domain)
    tgt = functor_K(phi.codomain)
    st = stone_on_hom(phi)
    sigma = tarski_P(st.mapping, st.dom.point_count, st.cod.point_count)
    return MBoolMorphism(src, tgt, phi, sigma)


def functor_K_inv(zm: ZMapInstance) -> BoolAlg:
    if zm.alpha != functor_K(zm.alpha.domain).alpha:
        raise WrongSubcategoryError("K inverse needs a literal K image")
    return zm.alpha.domain


def functor_K_inv_on_mor(m: MBoolMorphism) -> BoolHom:
    functor_K_inv(m.src)
    functor_K_inv(m.tgt)
    if m.sigma != functor_K_on_hom(m.phi).sigma:
        raise WrongSubcategoryError("sigma is not the power transport of phi")
    return m.phi


def functor_H(inst: ZAlgebraInstance) -> BoolAlg:
    if not classify(inst).t_algebra:
        raise WrongSubcategoryError("H needs a check-hom instance")
    return inst.algebra


def functor_H_inv(algebra: BoolAlg) -> ZAlgebraInstance:
    """(B, all check homs); the point set every atomic algebra carries."""
    return z_instance(algebra, (check_hom(algebra, x) for x in algebra.atoms()))


def functor_H_inv_on_sigma(sigma: BoolHom) -> DZAMorphism:
    """Lift sigma to the pair morphism with the precomposition point map.

    The transported hom of a check hom is itself a check hom, at the adjoint
    atom; both routes are computed and compared.
    """
    src = functor_H_inv(sigma.domain)
    tgt = functor_H_inv(sigma.codomain)
    at_map = tarski_At(sigma)
    point_map = [0] * len(tgt.point_idx)
    for y in sigma.codomain.atoms():
        j = tgt.position_of_hom(check_hom(sigma.codomain, y))
        composed = compose_homs(check_hom(sigma.codomain, y), sigma)
        via_adjoint = check_hom(sigma.domain, at_map[y])
        if composed != via_adjoint:
            raise AxiomViolationError("precomposition disagrees with the adjoint atom route")
        point_map[j] = src.position_of_hom(composed)
    return DZAMorphism(src, tgt, sigma, tuple(point_map))


def functor_H1(zm: ZMapInstance) -> BoolAlg:
    if not classify(zm).t_map:
        raise WrongSubcategoryError("H1 needs an identity map instance")
    return zm.alpha.domain


def functor_H1_inv(algebra: BoolAlg) -> ZMapInstance:
    return ZMapInstance(identity_hom(algebra))


def functor_H1_inv_on_sigma(sigma: BoolHom) -> MBoolMorphism:
    return MBoolMorphism(functor_H1_inv(sigma.domain), functor_H1_inv(sigma.codomain), sigma, sigma)


def functor_A(algebra: BoolAlg) -> tuple[BoolHom, ...]:
    """The check-hom set of an algebra, indexed by atom order."""
    return tuple(check_hom(algebra, x) for x in algebra.atoms())


def functor_A_on_sigma(sigma: BoolHom) -> tuple[int, ...]:
    """Index map: j-th check hom of the codomain -> its precomposition's index."""
    src_homs = functor_A(sigma.domain)
    out = []
    for y in sigma.codomain.atoms():
        composed = compose_homs(check_hom(sigma.codomain, y), sigma)
        out.append(src_homs.index(composed))
    return tuple(out)


def restriction_functor(which: str, arg):
    """Dispatch by name; raises WrongSubcategoryError outside the subcategory."""
    table = {
        "E": functor_E,
        "E_inv": functor_E_inv,
        "K": functor_K,
        "K_inv": functor_K_inv,
        "H": functor_H,
        "H_inv": functor_H_inv,
        "H1": functor_H1,
        "H1_inv": functor_H1_inv,
        "A_functor": functor_A,
    }
    if which not in table:
        raise PreconditionError(f"unknown restriction functor {which!r}")
    return table[which](arg)
