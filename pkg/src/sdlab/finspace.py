"""Finite topological spaces, continuous maps, clopen and regular-closed algebras.

Point sets are {0..n-1}; subsets are bitmasks.  A finite topology is closed
under arbitrary unions and intersections, so every point has a minimal open
neighbourhood and closure / interior are single scans over points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

from .errors import (
    AxiomViolationError,
    BoundExceededError,
    NotContinuousError,
    NotDenseError,
    NotSubalgebraError,
    PreconditionError,
)
from .boolalg import BoolAlg, BoolHom, SetSubalgebra, bit_positions

MAX_TOPOLOGY_POINTS = 12


@dataclass(frozen=True)
class FinTopSpace:
    """A topology on {0..point_count-1}; `opens` holds every open as a bitmask."""

    point_count: int
    opens: frozenset[int]

    def __post_init__(self) -> None:
        full = (1 << self.point_count) - 1
        if 0 not in self.opens or full not in self.opens:
            raise AxiomViolationError("opens must contain the empty set and the space")
        for u in self.opens:
            if u < 0 or u > full:
                raise AxiomViolationError(f"open {u} outside the point set")
        for u in self.opens:
            for v in self.opens:
                if u | v not in self.opens or u & v not in self.opens:
                    raise AxiomViolationError(f"opens not closed at pair ({u}, {v})")

    @property
    def full_mask(self) -> int:
        return (1 << self.point_count) - 1

    @cached_property
    def min_nbhd(self) -> tuple[int, ...]:
        """Minimal open neighbourhood of each point."""
        out = []
        for p in range(self.point_count):
            u = self.full_mask
            for o in self.opens:
                if o >> p & 1:
                    u &= o
            out.append(u)
        return tuple(out)

    def is_open(self, m: int) -> bool:
        return m in self.opens

    def is_closed(self, m: int) -> bool:
        return self.full_mask ^ m in self.opens

    def interior(self, m: int) -> int:
        out = 0
        for p in bit_positions(m):
            if self.min_nbhd[p] & ~m == 0:
                out |= 1 << p
        return out

    def closure(self, m: int) -> int:
        out = 0
        for p in range(self.point_count):
            if self.min_nbhd[p] & m:
                out |= 1 << p
        return out

    def is_dense(self, m: int) -> bool:
        return self.closure(m) == self.full_mask

    @cached_property
    def clopens(self) -> tuple[int, ...]:
        return tuple(sorted(u for u in self.opens if self.full_mask ^ u in self.opens))

    @cached_property
    def regular_closed(self) -> tuple[int, ...]:
        """All F with F = cl(int F); these are exactly the closures of opens."""
        return tuple(sorted({self.closure(u) for u in self.opens}))

    def subspace(self, mask: int) -> tuple["FinTopSpace", tuple[int, ...]]:
        """Subspace on the points of `mask`, plus the new-index -> old-point list."""
        points = tuple(bit_positions(mask))
        pos = {p: i for i, p in enumerate(points)}

        def project(m: int) -> int:
            out = 0
            for p in bit_positions(m & mask):
                out |= 1 << pos[p]
            return out

        sub_opens = frozenset(project(u) for u in self.opens)
        return FinTopSpace(len(points), sub_opens), points


def generate_topology(point_count: int, basis: tuple[int, ...] | list[int]) -> FinTopSpace:
    """Close basis + {empty, full} under pairwise union and intersection."""
    if point_count > MAX_TOPOLOGY_POINTS:
        raise BoundExceededError(f"{point_count} points exceed bound {MAX_TOPOLOGY_POINTS}")
    full = (1 << point_count) - 1
    for b in basis:
        if b < 0 or b > full:
            raise PreconditionError(f"basis set {b} outside the point set")
    opens = {0, full} | set(basis)
    frontier = list(opens)
    while frontier:
        nxt = []
        snapshot = list(opens)
        for u in frontier:
            for v in snapshot:
                for w in (u | v, u & v):
                    if w not in opens:
                        opens.add(w)
                        nxt.append(w)
        frontier = nxt
    return FinTopSpace(point_count, frozenset(opens))


def discrete_space(point_count: int) -> FinTopSpace:
    if point_count > MAX_TOPOLOGY_POINTS:
        raise BoundExceededError(f"{point_count} points exceed bound {MAX_TOPOLOGY_POINTS}")
    return FinTopSpace(point_count, frozenset(range(1 << point_count)))


def sierpinski_space() -> FinTopSpace:
    """Two points with {1} open and {0} not."""
    return generate_topology(2, [0b10])


def clopen_algebra(space: FinTopSpace) -> SetSubalgebra:
    """CO(X) as a subalgebra of the power set of the points."""
    return SetSubalgebra(space.point_count, frozenset(space.clopens))


@dataclass(frozen=True)
class SpaceMap:
    """A point map between finite spaces; `mapping[i]` is the image of point i."""

    dom: FinTopSpace
    cod: FinTopSpace
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.dom.point_count:
            raise PreconditionError("one image per domain point required")
        for q in self.mapping:
            if not 0 <= q < self.cod.point_count:
                raise PreconditionError(f"image point {q} outside the codomain")

    def __call__(self, p: int) -> int:
        return self.mapping[p]

    def preimage(self, m: int) -> int:
        out = 0
        for p, q in enumerate(self.mapping):
            if m >> q & 1:
                out |= 1 << p
        return out

    def image_mask(self) -> int:
        out = 0
        for q in self.mapping:
            out |= 1 << q
        return out

    def forward(self, m: int) -> int:
        out = 0
        for p in bit_positions(m):
            out |= 1 << self.mapping[p]
        return out

    @cached_property
    def is_continuous(self) -> bool:
        return all(self.preimage(u) in self.dom.opens for u in self.cod.opens)

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_open_map(self) -> bool:
        return all(self.forward(u) in self.cod.opens for u in self.dom.opens)

    def is_embedding(self) -> bool:
        """Injective, continuous, and a homeomorphism onto the image subspace."""
        if not (self.is_injective and self.is_continuous):
            return False
        sub, points = self.cod.subspace(self.image_mask())
        pos = {p: i for i, p in enumerate(points)}
        sub_opens = {sub_open for sub_open in sub.opens}
        for u in self.dom.opens:
            fwd = 0
            for p in bit_positions(u):
                fwd |= 1 << pos[self.mapping[p]]
            if fwd not in sub_opens:
                return False
        return True

    def is_homeomorphism(self) -> bool:
        return (
            self.is_injective
            and len(set(self.mapping)) == self.cod.point_count
            and self.is_continuous
            and self.is_open_map()
        )

    def inverse(self) -> "SpaceMap":
        if not self.is_homeomorphism():
            raise PreconditionError("inverse requires a homeomorphism")
        inv = [0] * self.cod.point_count
        for p, q in enumerate(self.mapping):
            inv[q] = p
        return SpaceMap(self.cod, self.dom, tuple(inv))


def identity_map(space: FinTopSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.point_count)))


def compose_maps(outer: SpaceMap, inner: SpaceMap) -> SpaceMap:
    if inner.cod != outer.dom:
        raise PreconditionError("maps are not composable")
    return SpaceMap(inner.dom, outer.cod, tuple(outer.mapping[q] for q in inner.mapping))


def all_point_maps(dom: FinTopSpace, cod: FinTopSpace) -> Iterator[SpaceMap]:
    """Every point map dom -> cod in lexicographic order (continuity not filtered)."""
    for images in product(range(cod.point_count), repeat=dom.point_count):
        yield SpaceMap(dom, cod, images)


def co_on_map(f: SpaceMap) -> BoolHom:
    """The preimage hom CO(cod) -> CO(dom) of a continuous map."""
    if not f.is_continuous:
        raise NotContinuousError("preimage hom needs a continuous map")
    co_dom = clopen_algebra(f.cod)
    co_cod = clopen_algebra(f.dom)
    return BoolHom(co_dom, co_cod, {u: f.preimage(u) for u in co_dom.elements})


@dataclass(frozen=True)
class SpacePredicates:
    t2: bool
    zero_dimensional: bool
    discrete: bool
    extremally_disconnected: bool
    compact: bool


def space_predicates(space: FinTopSpace) -> SpacePredicates:
    """Separation and disconnectedness flags for a finite space.

    Hausdorff holds iff minimal neighbourhoods are pairwise disjoint, which
    at finite scale forces discreteness.  Extremal disconnectedness is the
    openness of every closure of an open.  Finite spaces are compact.
    """
    nb = space.min_nbhd
    t2 = True
    for p in range(space.point_count):
        for q in range(p + 1, space.point_count):
            if nb[p] & nb[q]:
                t2 = False
    zero_dim = True
    clopen_set = set(space.clopens)
    for p in range(space.point_count):
        if not any(c >> p & 1 and c & ~nb[p] == 0 for c in clopen_set):
            zero_dim = False
    discrete = len(space.opens) == 1 << space.point_count
    ed = all(space.closure(u) in space.opens for u in space.opens)
    if ed and zero_dim:
        if tuple(sorted(space.clopens)) != space.regular_closed:
            raise AxiomViolationError("extremally disconnected but CO differs from RC")
    if t2 and not discrete:
        raise AxiomViolationError("finite Hausdorff space must be discrete")
    return SpacePredicates(t2, zero_dim, discrete, ed, True)


class RCAlgebra(BoolAlg):
    """The regular-closed sets of a space as a (complete) Boolean algebra.

    Join is union, meet is the closed interior of the intersection, and the
    complement of F is the closure of its set complement.  The Boolean
    axioms are verified on construction.
    """

    def __init__(self, space: FinTopSpace):
        self.space = space
        self.carrier = space.regular_closed
        self._members = frozenset(self.carrier)
        self.zero = 0
        self.one = space.full_mask
        self._verify_axioms()

    @property
    def elements(self) -> tuple[int, ...]:
        return self.carrier

    def meet(self, a: int, b: int) -> int:
        return self.space.closure(self.space.interior(a & b))

    def join(self, a: int, b: int) -> int:
        return a | b

    def complement(self, a: int) -> int:
        return self.space.closure(self.space.full_mask ^ a)

    def leq(self, a: int, b: int) -> bool:
        return a | b == b

    @cached_property
    def _atoms(self) -> tuple[int, ...]:
        nonzero = [a for a in self.carrier if a != 0]
        return tuple(a for a in nonzero if not any(b != a and self.leq(b, a) for b in nonzero))

    def atoms(self) -> tuple[int, ...]:
        return self._atoms

    def contains(self, a: int) -> bool:
        return a in self._members

    def join_all_sets(self, items: list[int]) -> int:
        """Arbitrary join: closure of the union."""
        m = 0
        for a in items:
            m |= a
        return self.space.closure(m)

    def meet_all_sets(self, items: list[int]) -> int:
        """Arbitrary meet: closure of the interior of the intersection."""
        m = self.space.full_mask
        for a in items:
            m &= a
        return self.space.closure(self.space.interior(m))

    def _verify_axioms(self) -> None:
        els = self.carrier
        if 0 not in self._members or self.one not in self._members:
            raise AxiomViolationError("RC algebra must contain the bounds")
        for a in els:
            if not self.contains(self.complement(a)):
                raise AxiomViolationError("RC complement left the carrier")
            if self.join(a, self.complement(a)) != self.one:
                raise AxiomViolationError("a v a* = 1 fails in RC")
            if self.meet(a, self.complement(a)) != self.zero:
                raise AxiomViolationError("a ^ a* = 0 fails in RC")
            if self.join(a, self.zero) != a or self.meet(a, self.one) != a:
                raise AxiomViolationError("identity laws fail in RC")
        for a in els:
            for b in els:
                if not self.contains(self.join(a, b)) or not self.contains(self.meet(a, b)):
                    raise AxiomViolationError("RC not closed under meet/join")
                if self.join(a, b) != self.join(b, a) or self.meet(a, b) != self.meet(b, a):
                    raise AxiomViolationError("commutativity fails in RC")
                if self.join(a, self.meet(a, b)) != a or self.meet(a, self.join(a, b)) != a:
                    raise AxiomViolationError("absorption fails in RC")
        for a in els:
            for b in els:
                for c in els:
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)):
                        raise AxiomViolationError("distributivity fails in RC")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RCAlgebra) and self.space == other.space

    def __hash__(self) -> int:
        return hash(("RCAlgebra", self.space))

    def __repr__(self) -> str:
        return f"RCAlgebra(points={self.space.point_count}, size={len(self.carrier)})"


def regular_closed_algebra(space: FinTopSpace) -> RCAlgebra:
    return RCAlgebra(space)


def regular_closed_bruteforce(space: FinTopSpace) -> tuple[int, ...]:
    """Independent oracle: scan every subset for F = cl(int F)."""
    if space.point_count > 12:
        raise BoundExceededError("brute-force RC scan capped at 12 points")
    out = [m for m in range(1 << space.point_count) if space.closure(space.interior(m)) == m]
    return tuple(out)


def dense_transfer(space: FinTopSpace, dense_mask: int) -> tuple[BoolHom, BoolHom]:
    """The mutually inverse isos between RC(Y) and RC(D) for dense D in Y.

    Restriction sends F to F n D (re-indexed); extension sends G to its
    closure in Y.  Raises NotDenseError when the mask is not dense.
    """
    if not space.is_dense(dense_mask):
        raise NotDenseError("transfer needs a dense subset")
    sub, points = space.subspace(dense_mask)
    pos = {p: i for i, p in enumerate(points)}
    rc_y = RCAlgebra(space)
    rc_d = RCAlgebra(sub)

    def project(m: int) -> int:
        out = 0
        for p in bit_positions(m & dense_mask):
            out |= 1 << pos[p]
        return out

    def unproject(m: int) -> int:
        out = 0
        for i in bit_positions(m):
            out |= 1 << points[i]
        return out

    restrict = BoolHom(rc_y, rc_d, {f: project(f) for f in rc_y.elements})
    extend = BoolHom(rc_d, rc_y, {g: space.closure(unproject(g)) for g in rc_d.elements})
    return restrict, extend


def enumerate_topologies(point_count: int) -> Iterator[FinTopSpace]:
    """All topologies on a labelled point set, by exhaustive closure filtering.

    Every candidate family {empty, full} + S over the proper nonempty subsets
    is tested for closure under pairwise union and intersection.  Counts for
    n = 0..4 are 1, 1, 4, 29, 355.
    """
    if point_count > 4:
        raise BoundExceededError("topology enumeration capped at 4 points")
    full = (1 << point_count) - 1
    proper = [m for m in range(1, full)] if point_count > 0 else []
    for pick in product((0, 1), repeat=len(proper)):
        fam = {0, full}
        for take, m in zip(pick, proper):
            if take:
                fam.add(m)
        ok = True
        for u in fam:
            if not ok:
                break
            for v in fam:
                if u | v not in fam or u & v not in fam:
                    ok = False
                    break
        if ok:
            yield FinTopSpace(point_count, frozenset(fam))
