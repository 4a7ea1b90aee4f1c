"""Finite Boolean algebras, set subalgebras, and homomorphisms with full tables.

Elements are bit vectors packed into Python ints.  For a power algebra bit i
marks the i-th atom; for a subalgebra of a power set bit i marks the i-th
point of the ground set.  Every hom carries its complete element table, so
power algebras, set subalgebras and the regular-closed algebras from the
topology module all share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AxiomViolationError,
    BoundExceededError,
    InvalidAtomError,
    InvalidHomError,
    NotSubalgebraError,
    PreconditionError,
)

DEFAULT_ATOM_BOUND = 16
# cap on |codomain| ** |atoms(domain)| during hom enumeration
DEFAULT_HOM_SEARCH_BOUND = 1_000_000


def bit_positions(mask: int) -> Iterator[int]:
    """Yield the set bit indices of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BoolAlg:
    """Interface shared by the concrete finite Boolean algebra classes.

    Subclasses provide `elements`, `zero`, `one`, `meet`, `join`,
    `complement` and `atoms`; the generic order and fold helpers live here.
    """

    zero: int
    one: int

    @property
    def elements(self) -> tuple[int, ...]:
        raise NotImplementedError

    def meet(self, a: int, b: int) -> int:
        raise NotImplementedError

    def join(self, a: int, b: int) -> int:
        raise NotImplementedError

    def complement(self, a: int) -> int:
        raise NotImplementedError

    def atoms(self) -> tuple[int, ...]:
        raise NotImplementedError

    def contains(self, a: int) -> bool:
        return a in self.elements

    def leq(self, a: int, b: int) -> bool:
        return self.join(a, b) == b

    def is_atom(self, a: int) -> bool:
        return a in self.atoms()

    def join_all(self, items: Iterable[int]) -> int:
        out = self.zero
        for a in items:
            out = self.join(out, a)
        return out

    def meet_all(self, items: Iterable[int]) -> int:
        out = self.one
        for a in items:
            out = self.meet(out, a)
        return out

    def atoms_below(self, a: int) -> tuple[int, ...]:
        return tuple(x for x in self.atoms() if self.leq(x, a))


@dataclass(frozen=True)
class FinBoolAlg(BoolAlg):
    """Power algebra on `atom_count` atoms; elements are atom-set bitmasks.

    `atom_count` 0 is legal and gives the one-element algebra with 0 = 1.
    """

    atom_count: int

    def __post_init__(self) -> None:
        if self.atom_count < 0:
            raise PreconditionError("atom_count must be >= 0")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return (1 << self.atom_count) - 1

    @cached_property
    def elements(self) -> tuple[int, ...]:
        if self.atom_count > DEFAULT_ATOM_BOUND:
            raise BoundExceededError(
                f"cannot enumerate {1 << self.atom_count} elements"
            )
        return tuple(range(1 << self.atom_count))

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def complement(self, a: int) -> int:
        return self.one ^ a

    def leq(self, a: int, b: int) -> bool:
        return a | b == b

    def atoms(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.atom_count))

    def is_atom(self, a: int) -> bool:
        return a != 0 and a & (a - 1) == 0 and a <= self.one

    def contains(self, a: int) -> bool:
        return 0 <= a <= self.one

    def atoms_below(self, a: int) -> tuple[int, ...]:
        return tuple(1 << i for i in bit_positions(a))


def make_power_algebra(n: int, bound: int = DEFAULT_ATOM_BOUND) -> FinBoolAlg:
    """Power algebra P({0..n-1}).  Raises BoundExceededError above `bound` atoms."""
    if n > bound:
        raise BoundExceededError(f"power algebra on {n} atoms exceeds bound {bound}")
    return FinBoolAlg(n)


def two() -> FinBoolAlg:
    """The two-element algebra; the hom target for points throughout."""
    return FinBoolAlg(1)


TWO = two()


@dataclass(frozen=True)
class SetSubalgebra(BoolAlg):
    """A subalgebra of the power set of {0..ground_size-1}.

    `members` must contain the empty and full set and be closed under union,
    intersection and complement; the constructor verifies this.  Atoms are
    the blocks of the induced partition of the ground set.
    """

    ground_size: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.ground_size < 0:
            raise PreconditionError("ground_size must be >= 0")
        full = (1 << self.ground_size) - 1
        mem = self.members
        if 0 not in mem or full not in mem:
            raise NotSubalgebraError("members must include the empty and full set")
        for m in mem:
            if m < 0 or m > full:
                raise NotSubalgebraError(f"member {m} outside the ground set")
            if full ^ m not in mem:
                raise NotSubalgebraError(f"not complement-closed at {m}")
        for a in mem:
            for b in mem:
                if a | b not in mem or a & b not in mem:
                    raise NotSubalgebraError(f"not lattice-closed at pair ({a}, {b})")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return (1 << self.ground_size) - 1

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def complement(self, a: int) -> int:
        return self.one ^ a

    def leq(self, a: int, b: int) -> bool:
        return a | b == b

    @cached_property
    def _atoms(self) -> tuple[int, ...]:
        # block of point p = intersection of all members containing p
        blocks = set()
        for p in range(self.ground_size):
            blk = self.one
            for m in self.members:
                if m >> p & 1:
                    blk &= m
            blocks.add(blk)
        return tuple(sorted(blocks))

    def atoms(self) -> tuple[int, ...]:
        return self._atoms

    def contains(self, a: int) -> bool:
        return a in self.members

    def atom_decomposition(self, a: int) -> tuple[int, ...]:
        """The partition blocks whose union is `a`."""
        if not self.contains(a):
            raise PreconditionError(f"{a} is not a member")
        return tuple(x for x in self._atoms if x & a == x)

    def atoms_below(self, a: int) -> tuple[int, ...]:
        return tuple(x for x in self._atoms if x & a == x)


def full_power_subalgebra(n: int) -> SetSubalgebra:
    """P({0..n-1}) presented as a subalgebra of itself."""
    if n > DEFAULT_ATOM_BOUND:
        raise BoundExceededError(f"ground size {n} exceeds bound {DEFAULT_ATOM_BOUND}")
    return SetSubalgebra(n, frozenset(range(1 << n)))


def boolean_closure(ground_size: int, generators: Iterable[int]) -> SetSubalgebra:
    """Smallest subalgebra of P({0..ground_size-1}) containing the generators.

    Points with the same membership signature across the generators fall in
    one block; the closure is the family of all unions of blocks.
    """
    gens = tuple(generators)
    full = (1 << ground_size) - 1
    for g in gens:
        if g < 0 or g > full:
            raise PreconditionError(f"generator {g} outside the ground set")
    sig_blocks: dict[tuple[bool, ...], int] = {}
    for p in range(ground_size):
        sig = tuple(bool(g >> p & 1) for g in gens)
        sig_blocks[sig] = sig_blocks.get(sig, 0) | (1 << p)
    blocks = sorted(sig_blocks.values())
    if len(blocks) > DEFAULT_ATOM_BOUND:
        raise BoundExceededError(f"closure has {len(blocks)} blocks")
    members = set()
    for pick in product((0, 1), repeat=len(blocks)):
        m = 0
        for take, blk in zip(pick, blocks):
            if take:
                m |= blk
        members.add(m)
    return SetSubalgebra(ground_size, frozenset(members))


class BoolHom:
    """A map between finite Boolean algebras, stored as a full element table."""

    def __init__(self, domain: BoolAlg, codomain: BoolAlg, table: Mapping[int, int]):
        if set(table) != set(domain.elements):
            raise InvalidHomError("table keys must be exactly the domain elements")
        for v in table.values():
            if not codomain.contains(v):
                raise InvalidHomError(f"table value {v} outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = dict(table)
        self._key = (domain, codomain, tuple(sorted(self.table.items())))

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BoolHom) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"BoolHom({self.domain!r} -> {self.codomain!r}, {self.table!r})"

    @cached_property
    def is_valid_hom(self) -> bool:
        """Preserves 0, 1, binary meet, binary join and complement."""
        dom, cod, t = self.domain, self.codomain, self.table
        if t[dom.zero] != cod.zero or t[dom.one] != cod.one:
            return False
        for a in dom.elements:
            if t[dom.complement(a)] != cod.complement(t[a]):
                return False
        for a in dom.elements:
            for b in dom.elements:
                if t[dom.meet(a, b)] != cod.meet(t[a], t[b]):
                    return False
                if t[dom.join(a, b)] != cod.join(t[a], t[b]):
                    return False
        return True

    @cached_property
    def is_mono(self) -> bool:
        vals = set(self.table.values())
        injective = len(vals) == len(self.table)
        if self.is_valid_hom:
            # cross-check: for a valid hom, trivial kernel iff injective
            trivial_kernel = self.kernel() == (self.domain.zero,)
            if trivial_kernel != injective:
                raise AxiomViolationError("kernel and injectivity checks disagree")
        return injective

    @cached_property
    def is_complete(self) -> bool:
        """Preserves all joins.  Finite algebras: equivalent to being a valid hom.

        Checked literally against every subset when the domain is small; the
        harness re-asserts the equivalence as a law at test scale.
        """
        if not self.is_valid_hom:
            return False
        dom, cod, t = self.domain, self.codomain, self.table
        if len(dom.elements) <= 12:
            for pick in product((0, 1), repeat=len(dom.elements)):
                chosen = [e for keep, e in zip(pick, dom.elements) if keep]
                if t[dom.join_all(chosen)] != cod.join_all(t[e] for e in chosen):
                    return False
        return True

    def kernel(self) -> tuple[int, ...]:
        return tuple(sorted(a for a in self.domain.elements if self.table[a] == self.codomain.zero))

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.table.values())))

    def is_iso(self) -> bool:
        return (
            self.is_valid_hom
            and self.is_mono
            and len(set(self.table.values())) == len(self.codomain.elements)
        )

    def inverse(self) -> "BoolHom":
        if not self.is_iso():
            raise PreconditionError("inverse requires an isomorphism")
        return BoolHom(self.codomain, self.domain, {v: k for k, v in self.table.items()})


def identity_hom(algebra: BoolAlg) -> BoolHom:
    return BoolHom(algebra, algebra, {a: a for a in algebra.elements})


def compose_homs(outer: BoolHom, inner: BoolHom) -> BoolHom:
    """outer after inner; the algebras must match up to element-table equality."""
    if inner.codomain != outer.domain:
        raise PreconditionError("homs are not composable")
    return BoolHom(
        inner.domain, outer.codomain, {a: outer.table[inner.table[a]] for a in inner.domain.elements}
    )


def hom_from_atom_images(domain: BoolAlg, codomain: BoolAlg, images: Sequence[int]) -> BoolHom:
    """Extend atom images by joins to a full table.  No validity filtering."""
    at = domain.atoms()
    if len(images) != len(at):
        raise PreconditionError("one image per atom required")
    table = {}
    for e in domain.elements:
        table[e] = codomain.join_all(img for x, img in zip(at, images) if domain.leq(x, e))
    return BoolHom(domain, codomain, table)


@lru_cache(maxsize=None)
def enumerate_homs(
    domain: BoolAlg, codomain: BoolAlg, bound: int = DEFAULT_HOM_SEARCH_BOUND
) -> tuple[BoolHom, ...]:
    """All Boolean homs domain -> codomain, lexicographic on atom image tuples.

    A candidate assigns each atom of the domain an element of the codomain;
    it extends to a hom iff the images are pairwise disjoint with join 1.
    The degenerate no-atom domain is handled by the final validity check.
    """
    at = domain.atoms()
    n_candidates = len(codomain.elements) ** len(at)
    if n_candidates > bound:
        raise BoundExceededError(f"{n_candidates} hom candidates exceed bound {bound}")
    out = []
    for images in product(codomain.elements, repeat=len(at)):
        ok = codomain.join_all(images) == codomain.one
        if ok:
            for i in range(len(images)):
                for j in range(i + 1, len(images)):
                    if codomain.meet(images[i], images[j]) != codomain.zero:
                        ok = False
                        break
                if not ok:
                    break
        if not ok:
            continue
        hom = hom_from_atom_images(domain, codomain, images)
        if hom.is_valid_hom:
            out.append(hom)
    return tuple(out)


# -- atom-indexed homs into 2 -------------------------------------------------


def check_hom(algebra: BoolAlg, atom: int) -> BoolHom:
    """The hom b -> [atom <= b] from `algebra` to 2."""
    if not algebra.is_atom(atom):
        raise InvalidAtomError(f"{atom} is not an atom")
    return BoolHom(algebra, TWO, {b: int(algebra.leq(atom, b)) for b in algebra.elements})


def hat_hom(algebra: SetSubalgebra, point: int) -> BoolHom:
    """The hom U -> [point in U] from a set subalgebra to 2."""
    if not isinstance(algebra, SetSubalgebra):
        raise PreconditionError("hat homs need a subalgebra of a power set")
    if not 0 <= point < algebra.ground_size:
        raise PreconditionError(f"point {point} outside the ground set")
    return BoolHom(algebra, TWO, {u: u >> point & 1 for u in algebra.elements})


def alpha_hom(alpha: BoolHom, atom: int) -> BoolHom:
    """The hom a -> [atom <= alpha(a)] indexed by an atom of alpha's codomain."""
    cod = alpha.codomain
    if not cod.is_atom(atom):
        raise InvalidAtomError(f"{atom} is not an atom of the codomain")
    return BoolHom(
        alpha.domain, TWO, {a: int(cod.leq(atom, alpha.table[a])) for a in alpha.domain.elements}
    )


def atom_hom(kind: str, **kwargs) -> BoolHom:
    """Dispatch over the three atom-indexed hom constructions.

    kind "check": algebra, atom.  kind "hat": algebra, point.
    kind "alpha": alpha, atom.
    """
    if kind == "check":
        return check_hom(kwargs["algebra"], kwargs["atom"])
    if kind == "hat":
        return hat_hom(kwargs["algebra"], kwargs["point"])
    if kind == "alpha":
        return alpha_hom(kwargs["alpha"], kwargs["atom"])
    raise PreconditionError(f"unknown atom_hom kind {kind!r}")


def _dedup_family(pairs: Iterable[tuple[int, BoolHom]]) -> tuple[tuple[BoolHom, ...], dict[int, int]]:
    homs: list[BoolHom] = []
    index: dict[int, int] = {}
    seen: dict[BoolHom, int] = {}
    for key, hom in pairs:
        if hom not in seen:
            seen[hom] = len(homs)
            homs.append(hom)
        index[key] = seen[hom]
    return tuple(homs), index


def check_family(algebra: BoolAlg) -> tuple[tuple[BoolHom, ...], dict[int, int]]:
    """All check homs of `algebra` with the atom -> position index map."""
    return _dedup_family((x, check_hom(algebra, x)) for x in algebra.atoms())


def hat_family(algebra: SetSubalgebra) -> tuple[tuple[BoolHom, ...], dict[int, int]]:
    """All hat homs of a set subalgebra with the point -> position index map.

    Distinct points may give the same hom when the algebra does not
    T0-separate them; the family is deduplicated by table.
    """
    return _dedup_family((p, hat_hom(algebra, p)) for p in range(algebra.ground_size))


def alpha_family(alpha: BoolHom) -> tuple[tuple[BoolHom, ...], dict[int, int]]:
    """The atom-indexed homs of `alpha`, deduplicated by table equality."""
    return _dedup_family((x, alpha_hom(alpha, x)) for x in alpha.codomain.atoms())


# -- partitions and subalgebra enumeration ------------------------------------


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of {0..n-1} as sorted block masks, in a fixed order.

    Enumerated through restricted growth strings, so the order is stable.
    """
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def emit() -> tuple[int, ...]:
        blocks: dict[int, int] = {}
        for p, lab in enumerate(rgs):
            blocks[lab] = blocks.get(lab, 0) | (1 << p)
        return tuple(sorted(blocks.values()))

    while True:
        yield emit()
        i = n - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                break
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0


def power_subalgebras(n: int) -> tuple[SetSubalgebra, ...]:
    """Every subalgebra of P({0..n-1}), one per partition of the ground set."""
    out = []
    for blocks in set_partitions(n):
        members = set()
        for pick in product((0, 1), repeat=len(blocks)):
            m = 0
            for take, blk in zip(pick, blocks):
                if take:
                    m |= blk
            members.add(m)
        out.append(SetSubalgebra(n, frozenset(members)))
    return tuple(out)


def subalgebra_carriers(algebra: BoolAlg) -> tuple[frozenset[int], ...]:
    """Carrier sets of all subalgebras of a finite algebra.

    Subalgebras correspond to partitions of the atom set: the carrier is the
    family of joins of unions of partition groups.
    """
    at = algebra.atoms()
    out = []
    for blocks in set_partitions(len(at)):
        group_joins = [algebra.join_all(at[i] for i in bit_positions(blk)) for blk in blocks]
        carrier = set()
        for pick in product((0, 1), repeat=len(group_joins)):
            carrier.add(algebra.join_all(g for take, g in zip(pick, group_joins) if take))
        out.append(frozenset(carrier))
    return tuple(out)
