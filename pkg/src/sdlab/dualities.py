"""Stone and Tarski duality at finite scale.

The Stone space of a finite algebra is its set of homs into 2, topologised
by the evaluation base {y : y(a) = 1}.  Tarski duality pairs power-set
algebras with atom sets via preimage homs and the adjoint atom map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import AxiomViolationError, PreconditionError
from .boolalg import (
    BoolAlg,
    BoolHom,
    FinBoolAlg,
    SetSubalgebra,
    TWO,
    compose_homs,
    enumerate_homs,
    hat_hom,
)
from .finspace import FinTopSpace, SpaceMap, clopen_algebra, generate_topology, space_predicates


@dataclass(frozen=True, eq=False)
class StoneSpaceResult:
    """The Stone space of an algebra with its hom points and evaluation base."""

    algebra: BoolAlg
    space: FinTopSpace
    points: tuple[BoolHom, ...]
    base: dict[int, int]

    def index_of(self, hom: BoolHom) -> int:
        try:
            return self.points.index(hom)
        except ValueError:
            raise PreconditionError("hom is not a point of this Stone space") from None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StoneSpaceResult) and self.algebra == other.algebra

    def __hash__(self) -> int:
        return hash(("StoneSpaceResult", self.algebra))


@lru_cache(maxsize=None)
def stone_space(algebra: BoolAlg) -> StoneSpaceResult:
    """Build S(A): hom points in enumeration order, evaluation sets as base."""
    points = enumerate_homs(algebra, TWO)
    base = {}
    for a in algebra.elements:
        mask = 0
        for i, y in enumerate(points):
            if y.table[a] == 1:
                mask |= 1 << i
        base[a] = mask
    space = generate_topology(len(points), tuple(base.values()))
    return StoneSpaceResult(algebra, space, points, base)


def stone_map(algebra: BoolAlg) -> BoolHom:
    """s: A -> CO(S(A)), a -> {y : y(a) = 1}.  An iso for finite algebras."""
    st = stone_space(algebra)
    co = clopen_algebra(st.space)
    return BoolHom(algebra, co, dict(st.base))


def stone_on_hom(phi: BoolHom) -> SpaceMap:
    """S(phi): S(B) -> S(A) for phi: A -> B, by precomposition."""
    st_dom = stone_space(phi.codomain)
    st_cod = stone_space(phi.domain)
    mapping = tuple(st_cod.index_of(compose_homs(y, phi)) for y in st_dom.points)
    return SpaceMap(st_dom.space, st_cod.space, mapping)


def t_component(space: FinTopSpace) -> SpaceMap:
    """t: X -> S(CO(X)), x -> (U -> [x in U]).  Needs zero-dimensional T2."""
    preds = space_predicates(space)
    if not (preds.t2 and preds.zero_dimensional):
        raise PreconditionError("t component needs a zero-dimensional Hausdorff space")
    co = clopen_algebra(space)
    st = stone_space(co)
    mapping = tuple(st.index_of(hat_hom(co, x)) for x in range(space.point_count))
    return SpaceMap(space, st.space, mapping)


# -- Tarski side --------------------------------------------------------------


def tarski_P(mapping: Sequence[int], dom_size: int, cod_size: int) -> BoolHom:
    """P(f): P(Y) -> P(X) by preimage, for f: X -> Y on bare point sets."""
    if len(mapping) != dom_size:
        raise PreconditionError("one image per domain point required")
    for q in mapping:
        if not 0 <= q < cod_size:
            raise PreconditionError(f"image point {q} outside the codomain")
    p_cod = FinBoolAlg(cod_size)
    p_dom = FinBoolAlg(dom_size)
    table = {}
    for m in p_cod.elements:
        pre = 0
        for p, q in enumerate(mapping):
            if m >> q & 1:
                pre |= 1 << p
        table[m] = pre
    return BoolHom(p_cod, p_dom, table)


def tarski_P_of_map(f: SpaceMap) -> BoolHom:
    return tarski_P(f.mapping, f.dom.point_count, f.cod.point_count)


def tarski_At(sigma: BoolHom) -> dict[int, int]:
    """At(sigma): atoms of the codomain -> atoms of the domain.

    Sends x' to the meet of every b with x' <= sigma(b).  For a finite
    (hence complete) hom the result is an atom; anything else is a bug.
    """
    if not sigma.is_valid_hom:
        raise PreconditionError("adjoint atom map needs a valid hom")
    dom, cod = sigma.domain, sigma.codomain
    out = {}
    for xp in cod.atoms():
        m = dom.meet_all(b for b in dom.elements if cod.leq(xp, sigma.table[b]))
        if not dom.is_atom(m):
            raise AxiomViolationError(f"adjoint image {m} of atom {xp} is not an atom")
        out[xp] = m
    return out


def tarski_eta(point_count: int) -> dict[int, int]:
    """eta: X -> At(P(X)), x -> {x}."""
    return {x: 1 << x for x in range(point_count)}


def tarski_epsilon(algebra: BoolAlg) -> BoolHom:
    """eps: B -> P(At(B)), b -> the set of atoms below b.  An iso when finite."""
    at = algebra.atoms()
    target = FinBoolAlg(len(at))
    table = {}
    for b in algebra.elements:
        mask = 0
        for i, x in enumerate(at):
            if algebra.leq(x, b):
                mask |= 1 << i
        table[b] = mask
    return BoolHom(algebra, target, table)


def tarski_epsilon_inverse(algebra: BoolAlg) -> BoolHom:
    """The inverse of eps computed by joins of atom sets, then cross-checked."""
    eps = tarski_epsilon(algebra)
    at = algebra.atoms()
    source = FinBoolAlg(len(at))
    table = {}
    for m in source.elements:
        table[m] = algebra.join_all(at[i] for i in range(len(at)) if m >> i & 1)
    inv = BoolHom(source, algebra, table)
    for b in algebra.elements:
        if inv.table[eps.table[b]] != b:
            raise AxiomViolationError("join inverse disagrees with eps")
    for m in source.elements:
        if eps.table[inv.table[m]] != m:
            raise AxiomViolationError("eps disagrees with join inverse")
    return inv


def tarski_units(algebra: BoolAlg) -> tuple[dict[int, int], BoolHom]:
    """(eta for the atom set of the algebra, eps for the algebra)."""
    return tarski_eta(len(algebra.atoms())), tarski_epsilon(algebra)


@dataclass(frozen=True)
class AdjointAtomCheck:
    holds: bool
    counterexample: str | None


def check_adjoint_atom(sigma: BoolHom) -> AdjointAtomCheck:
    """Verify x' <= sigma(b) iff At(sigma)(x') <= b over all pairs."""
    at_map = tarski_At(sigma)
    dom, cod = sigma.domain, sigma.codomain
    for b in dom.elements:
        for xp, x in at_map.items():
            if cod.leq(xp, sigma.table[b]) != dom.leq(x, b):
                return AdjointAtomCheck(False, f"b={b}, atom={xp}")
    return AdjointAtomCheck(True, None)


def power_of_stone_points(algebra: BoolAlg) -> FinBoolAlg:
    """P(X) for X the Stone point set of the algebra, atom i = point i."""
    return FinBoolAlg(len(stone_space(algebra).points))


def clopen_of_subspace(algebra: BoolAlg, point_idx: tuple[int, ...]) -> SetSubalgebra:
    """CO of the subspace of S(algebra) spanned by the given point indices."""
    st = stone_space(algebra)
    mask = 0
    for i in point_idx:
        mask |= 1 << i
    sub, _ = st.space.subspace(mask)
    return clopen_algebra(sub)
