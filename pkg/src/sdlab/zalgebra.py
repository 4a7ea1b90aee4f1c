"""Boolean z-algebras and dz-algebras with the first duality's functor pair.

A z-algebra is an algebra A with a chosen set X of homs A -> 2 that hits
every nonzero element; it is dz when the traces of elements on X give all
clopens of X in the subspace topology of the hom space.  The functors here
pair zero-dimensional Hausdorff spaces with dz-algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    AxiomViolationError,
    InvalidMorphismError,
    NotSubalgebraError,
    NotZAlgebraError,
    PreconditionError,
)
from .boolalg import (
    BoolAlg,
    BoolHom,
    FinBoolAlg,
    compose_homs,
    enumerate_homs,
    hat_hom,
    identity_hom,
    power_subalgebras,
)
from .dualities import StoneSpaceResult, stone_space
from .finspace import FinTopSpace, SpaceMap, clopen_algebra, co_on_map, generate_topology, space_predicates


@dataclass(frozen=True)
class ZAlgebraInstance:
    """(A, X) with X stored as sorted indices into the Stone point list of A."""

    algebra: BoolAlg
    point_idx: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(stone_space(self.algebra).points)
        if tuple(sorted(set(self.point_idx))) != self.point_idx:
            raise PreconditionError("point indices must be sorted and distinct")
        for i in self.point_idx:
            if not 0 <= i < n:
                raise PreconditionError(f"point index {i} out of range")

    @cached_property
    def stone(self) -> StoneSpaceResult:
        return stone_space(self.algebra)

    @cached_property
    def homs(self) -> tuple[BoolHom, ...]:
        return tuple(self.stone.points[i] for i in self.point_idx)

    @cached_property
    def point_mask(self) -> int:
        m = 0
        for i in self.point_idx:
            m |= 1 << i
        return m

    @cached_property
    def trace_table(self) -> dict[int, int]:
        """a -> bitmask over the positions of X: which chosen homs send a to 1."""
        table = {}
        for a in self.algebra.elements:
            m = 0
            for pos, x in enumerate(self.homs):
                if x.table[a] == 1:
                    m |= 1 << pos
            table[a] = m
        return table

    @cached_property
    def subspace(self) -> FinTopSpace:
        """X with the genuine subspace topology of the Stone space."""
        sub, points = self.stone.space.subspace(self.point_mask)
        if points != self.point_idx:
            raise AxiomViolationError("subspace point order drifted")
        return sub

    def position_of_hom(self, hom: BoolHom) -> int:
        """Position of a hom inside X, matching by table equality."""
        for pos, x in enumerate(self.homs):
            if x == hom:
                return pos
        raise PreconditionError("hom is not a chosen point of this instance")

    def __repr__(self) -> str:
        return f"ZAlgebraInstance(algebra={self.algebra!r}, points={list(self.point_idx)})"


def z_instance(algebra: BoolAlg, points: Iterable[BoolHom | int]) -> ZAlgebraInstance:
    """Build an instance from hom objects or Stone point indices."""
    st = stone_space(algebra)
    idx = set()
    for p in points:
        idx.add(p if isinstance(p, int) else st.index_of(p))
    return ZAlgebraInstance(algebra, tuple(sorted(idx)))


def full_instance(algebra: BoolAlg) -> ZAlgebraInstance:
    """(A, all of Bool(A,2)): the compact instance."""
    st = stone_space(algebra)
    return ZAlgebraInstance(algebra, tuple(range(len(st.points))))


@dataclass(frozen=True)
class ZCheck:
    holds: bool
    witness: int | None
    vacuous: bool
    dense_in_stone: bool


def is_z_algebra(inst: ZAlgebraInstance) -> ZCheck:
    """Density of X: every nonzero a must have some chosen hom sending it to 1.

    Cross-checked against topological density of X in the Stone space; the
    two must agree.  `vacuous` flags the degenerate no-nonzero-element case.
    """
    alg = inst.algebra
    nonzero = [a for a in alg.elements if a != alg.zero]
    witness = None
    for a in nonzero:
        if inst.trace_table[a] == 0:
            witness = a
            break
    holds = witness is None
    dense = inst.stone.space.is_dense(inst.point_mask)
    if dense != holds:
        raise AxiomViolationError("density in S(A) disagrees with the witness check")
    return ZCheck(holds, witness, vacuous=not nonzero, dense_in_stone=dense)


def trace_map(inst: ZAlgebraInstance) -> BoolHom:
    """s: A -> P(X), a -> the trace of the evaluation set of a on X."""
    return BoolHom(inst.algebra, FinBoolAlg(len(inst.point_idx)), dict(inst.trace_table))


def trace_corestriction(inst: ZAlgebraInstance) -> BoolHom:
    """The trace map corestricted to CO(X); total because traces are clopen."""
    co = clopen_algebra(inst.subspace)
    return BoolHom(inst.algebra, co, dict(inst.trace_table))


def trace_image(inst: ZAlgebraInstance) -> frozenset[int]:
    return frozenset(inst.trace_table.values())


@dataclass(frozen=True)
class DZCheck:
    holds: bool
    witness: int | None  # a clopen of the subspace missing from the trace image


def is_dz_algebra(inst: ZAlgebraInstance) -> DZCheck:
    """dz: the traces are exactly the clopens of the subspace topology on X."""
    if not is_z_algebra(inst).holds:
        raise NotZAlgebraError("dz check requires a z-algebra")
    image = trace_image(inst)
    clopens = inst.subspace.clopens
    for u in clopens:
        if u not in image:
            return DZCheck(False, u)
    # traces are always clopen, so equality reduces to the containment above
    if not image <= set(clopens):
        raise AxiomViolationError("a trace is not clopen in the subspace")
    return DZCheck(True, None)


def generated_topology_on_points(inst: ZAlgebraInstance) -> FinTopSpace:
    """The topology on X generated by the traces; equals the subspace topology."""
    return generate_topology(len(inst.point_idx), tuple(trace_image(inst)))


# -- t-coarser / t-equal ------------------------------------------------------


@dataclass(frozen=True)
class TCompare:
    a_coarser_b: bool
    b_coarser_a: bool
    t_equal: bool


def _check_subalgebra(members: frozenset[int], ambient: BoolAlg) -> None:
    for m in members:
        if not ambient.contains(m):
            raise NotSubalgebraError(f"{m} is not an element of the ambient algebra")
    if ambient.zero not in members or ambient.one not in members:
        raise NotSubalgebraError("subalgebra must contain 0 and 1")
    for a in members:
        if ambient.complement(a) not in members:
            raise NotSubalgebraError(f"not complement-closed at {a}")
        for b in members:
            if ambient.meet(a, b) not in members or ambient.join(a, b) not in members:
                raise NotSubalgebraError(f"not lattice-closed at ({a}, {b})")


def t_coarser(a_members: frozenset[int], b_members: frozenset[int], ambient: BoolAlg) -> bool:
    """Every atom-below-a situation in A is interpolated by an element of B."""
    for a in a_members:
        for x in ambient.atoms():
            if ambient.leq(x, a):
                if not any(ambient.leq(x, b) and ambient.leq(b, a) for b in b_members):
                    return False
    return True


def t_compare(
    a_members: frozenset[int], b_members: frozenset[int], ambient: BoolAlg
) -> TCompare:
    """The two t-coarser flags and their conjunction, after subalgebra checks."""
    _check_subalgebra(a_members, ambient)
    _check_subalgebra(b_members, ambient)
    ab = t_coarser(a_members, b_members, ambient)
    ba = t_coarser(b_members, a_members, ambient)
    return TCompare(ab, ba, ab and ba)


@dataclass(frozen=True)
class DwCheck:
    holds: bool
    offender: frozenset[int] | None  # a t-equal subalgebra escaping the trace image


def check_Dw(inst: ZAlgebraInstance) -> DwCheck:
    """Maximality of the trace image among t-equal subalgebras of P(X)."""
    n = len(inst.point_idx)
    ambient = FinBoolAlg(n)
    image = trace_image(inst)
    for sub in power_subalgebras(n):
        members = frozenset(sub.members)
        if t_compare(members, image, ambient).t_equal and not members <= image:
            return DwCheck(False, members)
    return DwCheck(True, None)


# -- morphisms ----------------------------------------------------------------


@dataclass(frozen=True)
class DZAMorphism:
    """A pair (phi, f): (A, X) -> (A', X') with f mapping X' back into X.

    `point_map[j]` is the position in the source X of the hom obtained by
    precomposing the j-th target hom with phi.  Used for plain z-algebra
    morphisms as well; dz-ness is a property of the objects.
    """

    src: ZAlgebraInstance
    tgt: ZAlgebraInstance
    phi: BoolHom
    point_map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.phi.domain != self.src.algebra or self.phi.codomain != self.tgt.algebra:
            raise InvalidMorphismError("phi must map the source algebra to the target algebra")
        if len(self.point_map) != len(self.tgt.point_idx):
            raise InvalidMorphismError("point_map must cover the target points")
        for j, xp in enumerate(self.tgt.homs):
            pos = self.point_map[j]
            if not 0 <= pos < len(self.src.homs):
                raise InvalidMorphismError(f"point_map[{j}] out of range")
            if compose_homs(xp, self.phi) != self.src.homs[pos]:
                raise InvalidMorphismError(f"x' after phi != f(x') at target position {j}")


def identity_dza(inst: ZAlgebraInstance) -> DZAMorphism:
    return DZAMorphism(inst, inst, identity_hom(inst.algebra), tuple(range(len(inst.point_idx))))


def compose_dza(outer: DZAMorphism, inner: DZAMorphism) -> DZAMorphism:
    """outer after inner; algebra parts compose forward, point maps backward."""
    if inner.tgt != outer.src:
        raise PreconditionError("morphisms are not composable")
    phi = compose_homs(outer.phi, inner.phi)
    point_map = tuple(inner.point_map[outer.point_map[j]] for j in range(len(outer.point_map)))
    return DZAMorphism(inner.src, outer.tgt, phi, point_map)


def dza_morphism_from_phi(src: ZAlgebraInstance, tgt: ZAlgebraInstance, phi: BoolHom) -> DZAMorphism | None:
    """The unique morphism with algebra part phi, or None if some x' after phi leaves X."""
    point_map = []
    for xp in tgt.homs:
        h = compose_homs(xp, phi)
        try:
            point_map.append(src.position_of_hom(h))
        except PreconditionError:
            return None
    return DZAMorphism(src, tgt, phi, tuple(point_map))


def enumerate_dza_morphisms(src: ZAlgebraInstance, tgt: ZAlgebraInstance) -> tuple[DZAMorphism, ...]:
    out = []
    for phi in enumerate_homs(src.algebra, tgt.algebra):
        m = dza_morphism_from_phi(src, tgt, phi)
        if m is not None:
            out.append(m)
    return tuple(out)


# -- the duality functors -----------------------------------------------------


def _require_zh(space: FinTopSpace) -> None:
    preds = space_predicates(space)
    if not (preds.t2 and preds.zero_dimensional):
        raise PreconditionError("functor needs a zero-dimensional Hausdorff space")


def hat_positions(space: FinTopSpace) -> tuple[int, ...]:
    """For each point x, the position of its hat hom inside F(space)'s X."""
    co = clopen_algebra(space)
    st = stone_space(co)
    idx = [st.index_of(hat_hom(co, x)) for x in range(space.point_count)]
    ordered = tuple(sorted(set(idx)))
    return tuple(ordered.index(i) for i in idx)


def functor_F(space: FinTopSpace) -> ZAlgebraInstance:
    """F(X) = (CO(X), hats of all points)."""
    _require_zh(space)
    co = clopen_algebra(space)
    return z_instance(co, (hat_hom(co, x) for x in range(space.point_count)))


def functor_F_on_map(f: SpaceMap) -> DZAMorphism:
    """F(f): F(cod) -> F(dom) with the preimage hom and the hat transport map."""
    _require_zh(f.dom)
    _require_zh(f.cod)
    src = functor_F(f.cod)
    tgt = functor_F(f.dom)
    phi = co_on_map(f)
    dom_pos = hat_positions(f.dom)
    cod_pos = hat_positions(f.cod)
    point_of_pos = {pos: x for x, pos in enumerate(dom_pos)}
    point_map = []
    for j in range(len(tgt.point_idx)):
        x = point_of_pos[j]
        point_map.append(cod_pos[f.mapping[x]])
    return DZAMorphism(src, tgt, phi, tuple(point_map))


def functor_G(inst: ZAlgebraInstance) -> FinTopSpace:
    """G(A, X) = the subspace X of the Stone space."""
    if not is_dz_algebra(inst).holds:
        raise PreconditionError("G is defined on dz-algebras")
    return inst.subspace


def functor_G_on_mor(m: DZAMorphism) -> SpaceMap:
    """G(phi, f) = f, as a continuous map between the subspaces."""
    g = SpaceMap(m.tgt.subspace, m.src.subspace, m.point_map)
    if not g.is_continuous:
        raise InvalidMorphismError("restriction of the Stone map must be continuous")
    return g


def s_prime_component(inst: ZAlgebraInstance) -> DZAMorphism:
    """s'_(A,X): (A,X) -> F(G(A,X)), the trace corestriction with the hat unindexing."""
    sub = inst.subspace
    target = functor_F(sub)
    phi = BoolHom(inst.algebra, target.algebra, dict(inst.trace_table))
    pos = hat_positions(sub)
    point_of_pos = {p: x for x, p in enumerate(pos)}
    point_map = tuple(point_of_pos[j] for j in range(len(target.point_idx)))
    return DZAMorphism(inst, target, phi, point_map)


def h_hat_component(space: FinTopSpace) -> SpaceMap:
    """The homeomorphism x -> hat(x) from X to G(F(X))."""
    _require_zh(space)
    target = functor_G(functor_F(space))
    return SpaceMap(space, target, hat_positions(space))


def is_dza_isomorphism(m: DZAMorphism) -> bool:
    """Iso in the pair category: algebra part iso, point part bijective, inverse valid."""
    if not m.phi.is_iso():
        return False
    if len(m.tgt.point_idx) != len(m.src.point_idx):
        return False
    if len(set(m.point_map)) != len(m.src.point_idx):
        return False
    inv_map = [0] * len(m.src.point_idx)
    for j, pos in enumerate(m.point_map):
        inv_map[pos] = j
    try:
        DZAMorphism(m.tgt, m.src, m.phi.inverse(), tuple(inv_map))
    except InvalidMorphismError:
        return False
    return True
