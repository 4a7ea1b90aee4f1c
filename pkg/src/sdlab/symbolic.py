"""A decidable fragment of an infinite instance: the free cylinder algebra.

Elements constrain finitely many coordinates of 0/1 streams; points are the
finitely supported streams.  Over the carrier that drops the all-zero point,
the set of points whose least 1 sits at an even position is clopen but is
not the trace of any cylinder element, giving a genuine z-but-not-dz witness
and a two-step chain of strictly growing t-equal algebras.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .errors import (
    BoundExceededError,
    EmptyElementError,
    PreconditionError,
    ZeroPointError,
)

MAX_CYL_WIDTH = 16

Point = frozenset  # finite set of 1-positions


@dataclass(frozen=True)
class CylElem:
    """A set of minterms over an initial segment of coordinates.

    `width` is the support length; a minterm is an int whose bit i is the
    required value of coordinate i.  Canonical form drops any trailing
    coordinate on which the minterms pair up symmetrically, so equal sets of
    streams have equal representations; 0 = (0, empty), 1 = (0, {0}).
    """

    width: int
    minterms: frozenset[int]

    def __post_init__(self) -> None:
        if self.width < 0 or self.width > MAX_CYL_WIDTH:
            raise BoundExceededError(f"width {self.width} outside [0, {MAX_CYL_WIDTH}]")
        for m in self.minterms:
            if not 0 <= m < 1 << self.width:
                raise PreconditionError(f"minterm {m} does not fit width {self.width}")
        w, ms = self.width, self.minterms
        while w > 0:
            high = 1 << (w - 1)
            if all((m in ms) == ((m | high) in ms) for m in range(high)):
                ms = frozenset(m for m in ms if m < high)
                w -= 1
            else:
                break
        if w != self.width:
            object.__setattr__(self, "width", w)
            object.__setattr__(self, "minterms", ms)

    def __repr__(self) -> str:
        shown = ",".join(format(m, f"0{self.width}b")[::-1] for m in sorted(self.minterms))
        return f"CylElem(w={self.width}, [{shown}])"


CYL_ZERO = CylElem(0, frozenset())
CYL_ONE = CylElem(0, frozenset({0}))


def cyl_from_strings(width: int, minterms: Iterable[str]) -> CylElem:
    """Build from strings where character i is the value of coordinate i."""
    ms = set()
    for s in minterms:
        if len(s) != width or any(ch not in "01" for ch in s):
            raise PreconditionError(f"minterm string {s!r} does not fit width {width}")
        ms.add(sum(1 << i for i, ch in enumerate(s) if ch == "1"))
    return CylElem(width, frozenset(ms))


def _lift(e: CylElem, width: int) -> frozenset[int]:
    """Minterms of e re-expressed at a larger width."""
    if width == e.width:
        return e.minterms
    extra = width - e.width
    out = set()
    for m in e.minterms:
        for c in range(1 << extra):
            out.add(m | (c << e.width))
    return frozenset(out)


def cyl_meet(a: CylElem, b: CylElem) -> CylElem:
    w = max(a.width, b.width)
    return CylElem(w, _lift(a, w) & _lift(b, w))


def cyl_join(a: CylElem, b: CylElem) -> CylElem:
    w = max(a.width, b.width)
    return CylElem(w, _lift(a, w) | _lift(b, w))


def cyl_complement(a: CylElem) -> CylElem:
    return CylElem(a.width, frozenset(range(1 << a.width)) - a.minterms)


def cyl_symdiff(a: CylElem, b: CylElem) -> CylElem:
    w = max(a.width, b.width)
    return CylElem(w, _lift(a, w) ^ _lift(b, w))


def cyl_leq(a: CylElem, b: CylElem) -> bool:
    return cyl_meet(a, b) == a


def cyl_member(point: Point, e: CylElem) -> bool:
    """Restriction to the support decides membership."""
    restriction = 0
    for i in point:
        if i < 0:
            raise PreconditionError("point positions must be nonnegative")
        if i < e.width:
            restriction |= 1 << i
    return restriction in e.minterms


def all_cyl_elems(max_width: int) -> tuple[CylElem, ...]:
    """Every canonical element of width at most max_width, in a fixed order."""
    if max_width > 4:
        raise BoundExceededError("element sweep capped at width 4")
    seen = set()
    for bits in product((0, 1), repeat=1 << max_width):
        ms = frozenset(i for i, b in enumerate(bits) if b)
        seen.add(CylElem(max_width, ms))
    return tuple(sorted(seen, key=lambda e: (e.width, sorted(e.minterms))))


@dataclass(frozen=True)
class SymbolicSpace:
    """Finitely supported streams minus a finite excluded set of points."""

    excluded: frozenset[Point]

    def contains(self, p: Point) -> bool:
        return p not in self.excluded


def default_space() -> SymbolicSpace:
    """The carrier with only the all-zero point removed."""
    return SymbolicSpace(frozenset({frozenset()}))


def density_witness(e: CylElem, space: SymbolicSpace) -> Point:
    """A carrier point inside a nonzero element.

    Takes the smallest minterm and pads with zeros; if that point is
    excluded, set one extra coordinate beyond the support to 1, walking
    upward past any further exclusions.
    """
    if e == CYL_ZERO:
        raise EmptyElementError("the bottom element has no points")
    m = min(e.minterms)
    point = frozenset(i for i in range(e.width) if m >> i & 1)
    if space.contains(point):
        return point
    k = e.width
    while not space.contains(point | {k}):
        k += 1
    return point | {k}


def parity_U_membership(p: Point) -> bool:
    """True when the least 1-position is even; defined away from the zero point."""
    if not p:
        raise ZeroPointError("the all-zero point has no least 1-position")
    return min(p) % 2 == 0


@dataclass(frozen=True)
class ExtElem:
    """A pair (on_u, off_u) standing for (on_u and U) or (off_u and not-U).

    Structural equality is not extensional; `ext_equal` is the decision
    procedure for equality as subsets of the default carrier.
    """

    on_u: CylElem
    off_u: CylElem


EXT_ZERO = ExtElem(CYL_ZERO, CYL_ZERO)
EXT_ONE = ExtElem(CYL_ONE, CYL_ONE)
EXT_U = ExtElem(CYL_ONE, CYL_ZERO)


def ext_embed(e: CylElem) -> ExtElem:
    return ExtElem(e, e)


def ext_meet(a: ExtElem, b: ExtElem) -> ExtElem:
    return ExtElem(cyl_meet(a.on_u, b.on_u), cyl_meet(a.off_u, b.off_u))


def ext_join(a: ExtElem, b: ExtElem) -> ExtElem:
    return ExtElem(cyl_join(a.on_u, b.on_u), cyl_join(a.off_u, b.off_u))


def ext_complement(a: ExtElem) -> ExtElem:
    return ExtElem(cyl_complement(a.on_u), cyl_complement(a.off_u))


def ext_member(p: Point, a: ExtElem) -> bool:
    if parity_U_membership(p):
        return cyl_member(p, a.on_u)
    return cyl_member(p, a.off_u)


def cyl_meets_U(g: CylElem) -> bool:
    """Whether g, as a subset of the default carrier, meets the parity set.

    A minterm with some 1 fixes the least 1-position of its whole cell; the
    all-zero minterm's cell contains tails of both parities.
    """
    for m in g.minterms:
        if m == 0:
            return True
        if (m & -m).bit_length() - 1 & 1 == 0:
            return True
    return False


def cyl_meets_coU(g: CylElem) -> bool:
    for m in g.minterms:
        if m == 0:
            return True
        if (m & -m).bit_length() - 1 & 1 == 1:
            return True
    return False


def ext_equal(a: ExtElem, b: ExtElem) -> bool:
    """Equality as subsets of the carrier: the on-U parts may only differ
    off U, and symmetrically."""
    return not cyl_meets_U(cyl_symdiff(a.on_u, b.on_u)) and not cyl_meets_coU(
        cyl_symdiff(a.off_u, b.off_u)
    )


def ext_leq(a: ExtElem, b: ExtElem) -> bool:
    return ext_equal(ext_meet(a, b), a)


def ext_is_cylinder(a: ExtElem, probe_width: int = 3) -> CylElem | None:
    """A cylinder representative if one exists at the probe width, else None."""
    for e in all_cyl_elems(probe_width):
        if ext_equal(a, ext_embed(e)):
            return e
    return None


def least_one_cell(j: int) -> CylElem:
    """The set of points whose least 1-position is exactly j."""
    if j < 0 or j + 1 > MAX_CYL_WIDTH:
        raise BoundExceededError(f"cell index {j} out of range")
    return CylElem(j + 1, frozenset({1 << j}))


def zero_cell(width: int) -> CylElem:
    """Points vanishing on the first `width` coordinates: the minimal
    cylinder neighbourhood of the all-zero point at that support."""
    return CylElem(width, frozenset({0}))


def random_cyl_elem(rng: random.Random, max_width: int = 6) -> CylElem:
    w = rng.randint(0, max_width)
    count = rng.randint(0, 1 << w)
    ms = frozenset(rng.sample(range(1 << w), count))
    return CylElem(w, ms)


def random_ext_elem(rng: random.Random, max_width: int = 6) -> ExtElem:
    return ExtElem(random_cyl_elem(rng, max_width), random_cyl_elem(rng, max_width))


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class SeparatingPair:
    in_U: Point
    out_U: Point
    agreeing_width: int  # both points restrict to all-zero up to this width


def separating_pair(bound: int) -> SeparatingPair:
    """Two points beyond the bound on which no bounded-width element differs
    but the parity set does."""
    odd = bound + 1 if (bound + 1) % 2 == 1 else bound + 2
    even = bound + 1 if (bound + 1) % 2 == 0 else bound + 2
    return SeparatingPair(frozenset({even}), frozenset({odd}), min(even, odd))


@dataclass(frozen=True)
class DzFailureCertificate:
    """The three-part record: U is clopen, U is no cylinder trace, and the
    extension algebra is a strictly larger t-equal companion."""

    bound: int
    even_cells: tuple[CylElem, ...]
    odd_cells: tuple[CylElem, ...]
    cover_checks_hold: bool
    pair: SeparatingPair
    pair_agrees_on_sampled_elems: bool
    pair_split_by_U: bool
    no_cylinder_equals_U_up_to_width: int
    strictness_holds: bool
    t_equal_holds: bool
    zero_point_obstruction_hold: bool


def _cover_checks(bound: int) -> tuple[tuple[CylElem, ...], tuple[CylElem, ...], bool]:
    """Cells by least 1-position: even ones inside U, odd ones disjoint from
    U, and pairwise disjoint; their union is the whole carrier, checked on
    the canonical points {j}."""
    even_cells = tuple(least_one_cell(j) for j in range(0, bound + 1, 2))
    odd_cells = tuple(least_one_cell(j) for j in range(1, bound + 1, 2))
    ok = True
    for c in even_cells:
        if cyl_meets_coU(c) or not cyl_meets_U(c):
            ok = False
    for c in odd_cells:
        if cyl_meets_U(c) or not cyl_meets_coU(c):
            ok = False
    cells = even_cells + odd_cells
    for i, c in enumerate(cells):
        for d in cells[i + 1 :]:
            if cyl_meet(c, d) != CYL_ZERO:
                ok = False
    for j in range(bound + 1):
        p = frozenset({j})
        hit = [c for c in cells if cyl_member(p, c)]
        if len(hit) != 1:
            ok = False
        if parity_U_membership(p) != (j % 2 == 0):
            ok = False
    return even_cells, odd_cells, ok


def refinement_witness(g: ExtElem, p: Point) -> CylElem:
    """A cylinder element with p inside it and inside g; the open-base step
    showing the extension generates no new opens."""
    if not ext_member(p, g):
        raise PreconditionError("the point must lie in the element")
    j = min(p)
    cell = least_one_cell(j)
    side = g.on_u if parity_U_membership(p) else g.off_u
    e = cyl_meet(cell, side)
    if not cyl_member(p, e) or not ext_leq(ext_embed(e), g):
        raise PreconditionError("refinement construction failed")
    return e


def t_equal_witness_check(seed: int, samples: int = 50) -> bool:
    """Cylinder and extension algebras refine each other on sampled points."""
    rng = random.Random(seed)
    space = default_space()
    for _ in range(samples):
        e = random_cyl_elem(rng)
        if e != CYL_ZERO:
            p = density_witness(e, space)
            if not ext_member(p, ext_embed(e)):
                return False
        g = random_ext_elem(rng)
        for side, want_u in ((g.on_u, True), (g.off_u, False)):
            probe = cyl_meets_U(side) if want_u else cyl_meets_coU(side)
            if side != CYL_ZERO and probe:
                p = _point_on_side(side, want_u)
                w = refinement_witness(g, p)
                if not cyl_member(p, w):
                    return False
    return True


def _point_on_side(e: CylElem, in_u: bool) -> Point:
    """A carrier point of e on the requested side of the parity set."""
    for m in sorted(e.minterms):
        if m != 0:
            j = (m & -m).bit_length() - 1
            if (j % 2 == 0) == in_u:
                return frozenset(i for i in range(e.width) if m >> i & 1)
        else:
            k = e.width if (e.width % 2 == 0) == in_u else e.width + 1
            return frozenset({k})
    raise PreconditionError("element has no point on that side")


def zero_point_obstruction(width_bound: int = 8) -> bool:
    """With the zero point in the carrier, the parity set cannot be clopen:
    each minimal cylinder neighbourhood of zero meets both parity classes."""
    for w in range(width_bound + 1):
        c = zero_cell(w)
        p_even = frozenset({w if w % 2 == 0 else w + 1})
        p_odd = frozenset({w if w % 2 == 1 else w + 1})
        if not (cyl_member(p_even, c) and cyl_member(p_odd, c)):
            return False
        if not (parity_U_membership(p_even) and not parity_U_membership(p_odd)):
            return False
    return True


def dz_failure_certificate(
    space: SymbolicSpace | None = None,
    bound: int = 8,
    probe_width: int = 3,
    seed: int = 0,
) -> DzFailureCertificate:
    """Assemble and re-verify the full witness record for the default carrier."""
    if space is None:
        space = default_space()
    if space != default_space():
        raise PreconditionError("the certificate is stated for the default carrier")
    even_cells, odd_cells, cover_ok = _cover_checks(bound)
    pair = separating_pair(bound)
    agree = all(
        cyl_member(pair.in_U, e) == cyl_member(pair.out_U, e)
        for e in all_cyl_elems(probe_width)
    )
    # beyond the probe sweep: both points are all-zero below their positions,
    # so any element of width <= agreeing_width sees identical restrictions
    agree = agree and pair.agreeing_width > probe_width
    split = parity_U_membership(pair.in_U) and not parity_U_membership(pair.out_U)
    strict = all(not ext_equal(EXT_U, ext_embed(e)) for e in all_cyl_elems(probe_width))
    return DzFailureCertificate(
        bound=bound,
        even_cells=even_cells,
        odd_cells=odd_cells,
        cover_checks_hold=cover_ok,
        pair=pair,
        pair_agrees_on_sampled_elems=agree,
        pair_split_by_U=split,
        no_cylinder_equals_U_up_to_width=probe_width,
        strictness_holds=strict,
        t_equal_holds=t_equal_witness_check(seed),
        zero_point_obstruction_hold=zero_point_obstruction(),
    )


def certificate_valid(cert: DzFailureCertificate) -> bool:
    return (
        cert.cover_checks_hold
        and cert.pair_agrees_on_sampled_elems
        and cert.pair_split_by_U
        and cert.strictness_holds
        and cert.t_equal_holds
        and cert.zero_point_obstruction_hold
    )


def symbolic_density_suite(seed: int, cases: int = 200) -> tuple[int, int]:
    """(checked, found) density witnesses over randomized nonzero elements."""
    rng = random.Random(seed)
    space = default_space()
    checked = found = 0
    while checked < cases:
        e = random_cyl_elem(rng)
        if e == CYL_ZERO:
            continue
        checked += 1
        p = density_witness(e, space)
        if space.contains(p) and cyl_member(p, e):
            found += 1
    return checked, found


def symbolic_dz_verdict(which: str) -> tuple[str, DzFailureCertificate | None]:
    """dz decision for the symbolic instances.

    The cylinder instance fails with the cached parity witness; for the
    extension instance no certificate either way is represented, so the
    verdict is undetermined.
    """
    if which == "cylinder":
        cert = dz_failure_certificate()
        if not certificate_valid(cert):
            raise PreconditionError("stored certificate failed re-verification")
        return "fail", cert
    if which == "extension":
        return "undetermined", None
    raise PreconditionError(f"unknown symbolic instance {which!r}")
