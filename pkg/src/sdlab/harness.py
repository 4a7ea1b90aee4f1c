"""Law registry, suite runner, and report rendering.

Each law re-checks one stated invariant over every instance inside the
configured bounds.  Laws carry hard caps where an exhaustive sweep stops
being feasible; asking for more than a cap yields a skipped entry, never a
silently narrowed pass.  Reports never include wall-clock data, so equal
configs produce byte-identical artifacts.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

from . import compactify as comp
from . import symbolic as sym
from .boolalg import (
    TWO,
    BoolHom,
    FinBoolAlg,
    SetSubalgebra,
    alpha_family,
    bit_positions,
    check_family,
    check_hom,
    compose_homs,
    enumerate_homs,
    full_power_subalgebra,
    hat_family,
    identity_hom,
    power_subalgebras,
)
from .dualities import (
    check_adjoint_atom,
    stone_map,
    stone_on_hom,
    stone_space,
    t_component,
    tarski_At,
    tarski_P,
    tarski_P_of_map,
    tarski_epsilon,
    tarski_epsilon_inverse,
    tarski_eta,
)
from .errors import SdlabError
from .finspace import (
    FinTopSpace,
    SpaceMap,
    all_point_maps,
    clopen_algebra,
    co_on_map,
    compose_maps,
    dense_transfer,
    discrete_space,
    enumerate_topologies,
    identity_map,
    regular_closed_algebra,
    regular_closed_bruteforce,
    space_predicates,
)
from .zalgebra import (
    ZAlgebraInstance,
    check_Dw,
    compose_dza,
    enumerate_dza_morphisms,
    full_instance,
    functor_F,
    functor_F_on_map,
    functor_G,
    functor_G_on_mor,
    h_hat_component,
    identity_dza,
    is_dz_algebra,
    is_dza_isomorphism,
    is_z_algebra,
    s_prime_component,
    trace_map,
    z_instance,
)
from .zmaps import (
    ZMapInstance,
    classify,
    compose_mbool,
    enumerate_mbool_morphisms,
    epsilon_prime_component,
    epsilon_tilde_component,
    eta_tilde_component,
    functor_A,
    functor_A_on_sigma,
    functor_E,
    functor_E_inv,
    functor_E_inv_on_mor,
    functor_E_on_hom,
    functor_Fprime,
    functor_Fprime_on_mor,
    functor_frakF,
    functor_frakF_on_map,
    functor_frakG,
    functor_frakG_on_mor,
    functor_Gprime,
    functor_Gprime_on_mor,
    functor_H1,
    functor_H1_inv,
    functor_H1_inv_on_sigma,
    functor_H,
    functor_H_inv,
    functor_H_inv_on_sigma,
    functor_K,
    functor_K_inv,
    functor_K_inv_on_mor,
    functor_K_on_hom,
    identity_mbool,
    is_mbool_isomorphism,
    is_mz_map,
    is_z_map,
    mz_subalgebra_route,
)

SUITES = ("finite", "symbolic", "all")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "finite"
    max_atoms: int = 3
    max_points: int = 4
    seed: int = 0
    output: str | None = None

    def __post_init__(self) -> None:
        if self.suite not in SUITES:
            raise ValueError(f"suite must be one of {SUITES}")
        if self.max_atoms < 0 or self.max_points < 0:
            raise ValueError("bounds must be nonnegative")


@dataclass
class LawResult:
    law_id: str
    statement: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    undetermined: int = 0
    skipped: bool = False
    skip_reason: str | None = None
    counterexample: str | None = None
    wall_time: float = 0.0  # in-memory only, never serialized

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        if self.failed:
            return "fail"
        if self.undetermined and not self.passed:
            return "undetermined"
        return "pass"


class Collector:
    """Mutates a LawResult as checks stream in."""

    def __init__(self, result: LawResult) -> None:
        self.result = result

    def check(self, ok: bool, describe: str = "") -> bool:
        self.result.instances += 1
        if ok:
            self.result.passed += 1
        else:
            self.result.failed += 1
            if self.result.counterexample is None:
                self.result.counterexample = describe or "unnamed instance"
        return ok

    def undetermined(self, note: str = "") -> None:
        self.result.instances += 1
        self.result.undetermined += 1
        if self.result.counterexample is None and note:
            self.result.counterexample = note

    def skip(self, reason: str) -> None:
        self.result.skipped = True
        self.result.skip_reason = reason


@dataclass(frozen=True)
class Law:
    law_id: str
    statement: str
    suites: frozenset[str]
    fn: Callable[[SuiteConfig, Collector, random.Random], None]


LAWS: list[Law] = []


def law(law_id: str, statement: str, suites: tuple[str, ...] = ("finite",)):
    def register(fn):
        LAWS.append(Law(law_id, statement, frozenset(suites), fn))
        return fn

    return register


# -- shared enumeration helpers -----------------------------------------------


@lru_cache(maxsize=None)
def _algebras(max_atoms: int) -> tuple[FinBoolAlg, ...]:
    return tuple(FinBoolAlg(k) for k in range(max_atoms + 1))


@lru_cache(maxsize=None)
def _spaces(max_points: int) -> tuple[FinTopSpace, ...]:
    out = []
    for n in range(min(max_points, 4) + 1):
        out.extend(enumerate_topologies(n))
    return tuple(out)


@lru_cache(maxsize=None)
def _discrete(max_points: int) -> tuple[FinTopSpace, ...]:
    return tuple(discrete_space(n) for n in range(max_points + 1))


@lru_cache(maxsize=None)
def _all_instances(max_atoms: int) -> tuple[ZAlgebraInstance, ...]:
    """Every (A, X) with A a power algebra within bounds and X any point set."""
    out = []
    for alg in _algebras(max_atoms):
        n = len(stone_space(alg).points)
        for mask in range(1 << n):
            out.append(ZAlgebraInstance(alg, tuple(bit_positions(mask))))
    return tuple(out)


@lru_cache(maxsize=None)
def _z_instances(max_atoms: int) -> tuple[ZAlgebraInstance, ...]:
    return tuple(i for i in _all_instances(max_atoms) if is_z_algebra(i).holds)


@lru_cache(maxsize=None)
def _dz_instances(max_atoms: int) -> tuple[ZAlgebraInstance, ...]:
    return tuple(i for i in _z_instances(max_atoms) if is_dz_algebra(i).holds)


@lru_cache(maxsize=None)
def _monos(max_atoms: int) -> tuple[BoolHom, ...]:
    out = []
    for a in _algebras(max_atoms):
        for b in _algebras(max_atoms):
            for h in enumerate_homs(a, b):
                if h.is_mono:
                    out.append(h)
    return tuple(out)


@lru_cache(maxsize=None)
def _mz_maps(max_atoms: int) -> tuple[ZMapInstance, ...]:
    out = []
    for h in _monos(max_atoms):
        zm = ZMapInstance(h)
        if is_mz_map(zm).holds:
            out.append(zm)
    return tuple(out)


@lru_cache(maxsize=None)
def _compactifications(max_points: int) -> tuple[comp.Compactification, ...]:
    """b0 of each small discrete space plus all target relabelings."""
    out = []
    for n in range(min(max_points, 3) + 1):
        base = comp.banaschewski_b0(discrete_space(n))
        out.extend(comp.relabeled_compactifications(base))
    return tuple(out)


def _eff(config_value: int, cap: int, col: Collector, what: str) -> int | None:
    """Effective bound for a law with a hard cap; None means skip."""
    if config_value > cap:
        col.skip(f"requested {what} {config_value} exceeds this law's exhaustive cap {cap}")
        return None
    return config_value


# -- boolean-core laws --------------------------------------------------------


@law(
    "bool.hom-preservation",
    "every enumerated valid homomorphism preserves meet, join, and complement "
    "on all element pairs",
)
def _law_hom_preservation(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for a in _algebras(eff):
        for b in _algebras(eff):
            for h in enumerate_homs(a, b):
                ok = True
                for x in a.elements:
                    if b.complement(h.table[x]) != h.table[a.complement(x)]:
                        ok = False
                    for y in a.elements:
                        if h.table[a.meet(x, y)] != b.meet(h.table[x], h.table[y]):
                            ok = False
                        if h.table[a.join(x, y)] != b.join(h.table[x], h.table[y]):
                            ok = False
                col.check(ok, f"hom {h!r}")


@law(
    "bool.hhat-injective",
    "indexing points by their hat homomorphisms into a set algebra is "
    "injective exactly when the algebra separates the points",
)
def _law_hhat_injective(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 5, col, "max-points")
    if eff is None:
        return
    for n in range(eff + 1):
        for sub in power_subalgebras(n):
            homs, _ = hat_family(sub)
            signatures = [
                frozenset(m for m in sub.members if m >> x & 1) for x in range(n)
            ]
            separates = len(set(signatures)) == n
            col.check(
                (len(homs) == n) == separates,
                f"subalgebra {sorted(sub.members)} on {n} points",
            )


@law(
    "bool.hcheck-bijection",
    "atoms of a finite algebra biject with its homomorphisms to the "
    "two-element algebra via the check map",
)
def _law_hcheck_bijection(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 4, col, "max-atoms")
    if eff is None:
        return
    for alg in _algebras(eff):
        homs, _ = check_family(alg)
        all_homs = enumerate_homs(alg, TWO)
        ok = len(homs) == len(tuple(alg.atoms())) and set(homs) == set(all_homs)
        col.check(ok, f"algebra with {alg.atom_count} atoms")


@law(
    "bool.halpha-mono-injective",
    "when every atom of the codomain is a meet of image elements of a mono, "
    "the atom-indexed hom family has one member per atom",
)
def _law_halpha(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for h in _monos(eff):
        zm = ZMapInstance(h)
        meets_ok = is_z_map(zm).holds
        homs, _ = alpha_family(h)
        atom_count = len(tuple(h.codomain.atoms()))
        if meets_ok:
            col.check(len(homs) == atom_count, f"mono {h!r}")
        else:
            col.check(True)


# -- finspace laws ------------------------------------------------------------


@law(
    "space.t2-discrete",
    "every finite Hausdorff topology is discrete; recorded as the reason the "
    "finite tier cannot exhibit non-trivial compactifications",
)
def _law_t2_discrete(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for s in _spaces(eff):
        p = space_predicates(s)
        col.check(not p.t2 or p.discrete, f"space {s!r}")


@law(
    "space.rc-axioms",
    "regular closed sets form a Boolean algebra under closure-of-interior "
    "operations, matching a brute-force scan of all subsets",
)
def _law_rc_axioms(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for s in _spaces(eff):
        alg = regular_closed_algebra(s)  # constructor re-verifies the axioms
        col.check(
            tuple(sorted(alg.elements)) == regular_closed_bruteforce(s),
            f"space {s!r}",
        )


@law(
    "space.dense-transfer",
    "restriction to a dense subspace and closure back are mutually inverse "
    "isomorphisms between the regular closed algebras",
)
def _law_dense_transfer(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for s in _spaces(eff):
        for mask in range(1 << s.point_count):
            if not s.is_dense(mask):
                continue
            restrict, extend = dense_transfer(s, mask)
            back = compose_homs(extend, restrict)
            forth = compose_homs(restrict, extend)
            ok = (
                back == identity_hom(restrict.domain)
                and forth == identity_hom(restrict.codomain)
            )
            col.check(ok, f"space {s!r} dense mask {mask:b}")


@law(
    "space.co-functorial",
    "taking clopens of a continuous map reverses composition and fixes "
    "identities",
)
def _law_co_functorial(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for s in _spaces(eff):
        col.check(co_on_map(identity_map(s)) == identity_hom(clopen_algebra(s)))
    # composite sweep on a reduced grid: outer spaces stay tiny so the pair
    # count does not explode
    ends = _spaces(min(eff, 2))
    mids = _spaces(min(eff, 3))
    for x in ends:
        for y in mids:
            fs = [f for f in all_point_maps(x, y) if f.is_continuous]
            for z in ends:
                gs = [g for g in all_point_maps(y, z) if g.is_continuous]
                for f in fs:
                    for g in gs:
                        lhs = co_on_map(compose_maps(g, f))
                        rhs = compose_homs(co_on_map(f), co_on_map(g))
                        col.check(lhs == rhs, f"f={f!r} g={g!r}")


# -- duality laws -------------------------------------------------------------


@law(
    "dual.stone-roundtrip",
    "the base map of a finite algebra is an isomorphism onto the clopens of "
    "its hom space, and evaluation is a homeomorphism back",
)
def _law_stone_roundtrip(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 4, col, "max-atoms")
    if eff is None:
        return
    for alg in _algebras(eff):
        st = stone_space(alg)
        s = stone_map(alg)
        col.check(s.is_iso(), f"base map of {alg!r}")
        t = t_component(st.space)
        col.check(t.is_homeomorphism(), f"evaluation on the hom space of {alg!r}")


@law(
    "dual.contravariance",
    "hom-space and clopen-algebra functors reverse composition and preserve "
    "identities",
)
def _law_contravariance(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    algs = _algebras(eff)
    for a in algs:
        col.check(stone_on_hom(identity_hom(a)) == identity_map(stone_space(a).space))
    for a in algs:
        for b in algs:
            for psi in enumerate_homs(a, b):
                for c in algs:
                    for phi in enumerate_homs(b, c):
                        lhs = stone_on_hom(compose_homs(phi, psi))
                        rhs = compose_maps(stone_on_hom(psi), stone_on_hom(phi))
                        col.check(lhs == rhs, f"phi={phi!r} psi={psi!r}")
    for n in range(min(cfg.max_points, 3) + 1):
        x = discrete_space(n)
        col.check(co_on_map(identity_map(x)) == identity_hom(clopen_algebra(x)))


@law(
    "dual.naturality-s-t",
    "the base-map and evaluation squares commute against every homomorphism "
    "and every continuous map at this scale",
)
def _law_naturality(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    algs = _algebras(eff)
    for a in algs:
        for b in algs:
            for phi in enumerate_homs(a, b):
                lhs = compose_homs(stone_map(b), phi)
                rhs = compose_homs(co_on_map(stone_on_hom(phi)), stone_map(a))
                col.check(lhs == rhs, f"base naturality at {phi!r}")
    for m in range(min(cfg.max_points, 3) + 1):
        for n in range(min(cfg.max_points, 3) + 1):
            x, y = discrete_space(m), discrete_space(n)
            for f in all_point_maps(x, y):
                lhs = compose_maps(t_component(y), f)
                rhs = compose_maps(stone_on_hom(co_on_map(f)), t_component(x))
                col.check(lhs == rhs, f"evaluation naturality at {f!r}")


@law(
    "dual.tarski-units",
    "atom extraction and preimage are mutually inverse up to the unit maps, "
    "which are isomorphisms; the adjoint-atom identity holds throughout",
)
def _law_tarski(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    algs = _algebras(eff)
    for b in algs:
        eps = tarski_epsilon(b)
        col.check(eps.is_iso(), f"atom-set unit of {b!r}")
        col.check(
            compose_homs(tarski_epsilon_inverse(b), eps) == identity_hom(b),
            f"unit inverse at {b!r}",
        )
    for n in range(min(cfg.max_points, 3) + 1):
        eta = tarski_eta(n)
        col.check(
            sorted(eta) == list(range(n)) and len(set(eta.values())) == n,
            f"point unit at {n} points",
        )
    for m in range(min(cfg.max_points, 3) + 1):
        for n in range(min(cfg.max_points, 3) + 1):
            x, y = discrete_space(m), discrete_space(n)
            for f in all_point_maps(x, y):
                sigma = tarski_P_of_map(f)
                amap = tarski_At(sigma)
                eta_m, eta_n = tarski_eta(m), tarski_eta(n)
                ok = all(amap[eta_m[p]] == eta_n[f(p)] for p in range(m))
                col.check(ok, f"atoms of preimage of {f!r}")
    for b in algs:
        for b2 in algs:
            for sigma in enumerate_homs(b, b2):
                col.check(
                    check_adjoint_atom(sigma).holds, f"adjoint-atom at {sigma!r}"
                )
                amap = tarski_At(sigma)
                atoms2 = tuple(b2.atoms())
                atoms1 = tuple(b.atoms())
                mapping = tuple(atoms1.index(amap[x]) for x in atoms2)
                p_of_at = tarski_P(mapping, len(atoms2), len(atoms1))
                eps1, eps2 = tarski_epsilon(b), tarski_epsilon(b2)
                lhs = compose_homs(eps2, sigma)
                rhs = compose_homs(p_of_at, eps1)
                col.check(lhs == rhs, f"preimage of atoms of {sigma!r}")


# -- zalgebra laws ------------------------------------------------------------


@law(
    "za.def-fact-equiv",
    "a point family is positively witnessing exactly when it is dense in the "
    "hom space",
)
def _law_z_equiv(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for inst in _all_instances(eff):
        chk = is_z_algebra(inst)  # cross-checks density internally
        col.check(chk.holds == chk.dense_in_stone, f"instance {inst!r}")
        if chk.vacuous:
            col.undetermined(f"vacuous witness set accepted for {inst!r}")


@law(
    "za.mono-equiv",
    "a point family is positively witnessing exactly when its trace map is "
    "injective",
)
def _law_z_mono(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for inst in _all_instances(eff):
        col.check(
            is_z_algebra(inst).holds == trace_map(inst).is_mono,
            f"instance {inst!r}",
        )


@law(
    "za.topology-match",
    "traces of algebra elements are clopen and generate exactly the subspace "
    "topology on the point family",
)
def _law_z_topology(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    from .zalgebra import generated_topology_on_points

    for inst in _all_instances(eff):
        sub = inst.subspace
        clopens = set(sub.clopens)
        traces_clopen = all(inst.trace_table[a] in clopens for a in inst.algebra.elements)
        col.check(
            traces_clopen and generated_topology_on_points(inst) == sub,
            f"instance {inst!r}",
        )


@law(
    "za.dw-equiv",
    "the trace algebra is all subspace clopens exactly when every trace-"
    "equivalent subalgebra of the point powerset lies inside it",
)
def _law_dw_equiv(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for inst in _z_instances(eff):
        if len(inst.point_idx) > min(cfg.max_points, 3):
            continue
        col.check(
            is_dz_algebra(inst).holds == check_Dw(inst).holds,
            f"instance {inst!r}",
        )


@law(
    "za.duality-zh-dza",
    "clopen-algebra-with-hats and subspace-of-points are mutually inverse "
    "functors up to the natural trace and hat isomorphisms",
)
def _law_zh_dza(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    npts = min(cfg.max_points, 3)
    for n in range(npts + 1):
        x = discrete_space(n)
        inst = functor_F(x)
        col.check(is_dz_algebra(inst).holds, f"image of {x!r}")
        col.check(
            h_hat_component(x).is_homeomorphism(), f"hat component at {x!r}"
        )
        col.check(functor_F_on_map(identity_map(x)) == identity_dza(inst))
    for inst in _dz_instances(eff):
        sp = s_prime_component(inst)
        col.check(is_dza_isomorphism(sp), f"trace component at {inst!r}")
    for m in range(npts + 1):
        for n in range(npts + 1):
            x, y = discrete_space(m), discrete_space(n)
            for f in all_point_maps(x, y):
                for k in range(npts + 1):
                    z = discrete_space(k)
                    for g in all_point_maps(y, z):
                        lhs = functor_F_on_map(compose_maps(g, f))
                        rhs = compose_dza(functor_F_on_map(f), functor_F_on_map(g))
                        col.check(
                            lhs.phi == rhs.phi and lhs.point_map == rhs.point_map,
                            f"F on {g!r} after {f!r}",
                        )
    for src in _dz_instances(eff):
        for tgt in _dz_instances(eff):
            for m in enumerate_dza_morphisms(src, tgt):
                img = functor_G_on_mor(m)
                col.check(img.is_continuous, f"G image of {m!r}")
                left = compose_dza(s_prime_component(tgt), m)
                fg_m = functor_F_on_map(img)
                right = compose_dza(fg_m, s_prime_component(src))
                col.check(
                    left.phi == right.phi and left.point_map == right.point_map,
                    f"trace naturality at {m!r}",
                )


# -- zmaps laws ---------------------------------------------------------------


@law(
    "zm.mz-equiv",
    "the witnessing-map property with full subspace trace agrees with the "
    "subalgebra characterization on every mono at this scale",
)
def _law_mz_equiv(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for h in _monos(eff):
        zm = ZMapInstance(h)
        if not is_z_map(zm).holds:
            col.check(not is_mz_map(zm).holds, f"non-witnessing mono {h!r}")
            continue
        col.check(
            is_mz_map(zm).holds == mz_subalgebra_route(zm).holds,
            f"mono {h!r}",
        )


@law(
    "zm.mbool-dza-equiv",
    "trace-map and point-subspace constructions form an equivalence between "
    "the map picture and the algebra-with-points picture",
)
def _law_mbool_dza(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for inst in _dz_instances(eff):
        zm = functor_Fprime(inst)
        col.check(is_mz_map(zm).holds, f"trace image of {inst!r}")
        back = functor_Gprime(zm)
        sp = s_prime_component(inst)
        col.check(sp.tgt == back, f"round-trip object at {inst!r}")
        col.check(is_dza_isomorphism(sp), f"round-trip component at {inst!r}")
    for zm in _mz_maps(eff):
        ep = epsilon_prime_component(zm)
        col.check(is_mbool_isomorphism(ep), f"counit at {zm!r}")
    mzs = _mz_maps(min(eff, 2))
    for src in mzs:
        for tgt in mzs:
            for m in enumerate_mbool_morphisms(src, tgt):
                img = functor_Gprime_on_mor(m)
                back = functor_Fprime_on_mor(img)
                left = compose_mbool(epsilon_prime_component(tgt), m)
                right = compose_mbool(back, epsilon_prime_component(src))
                col.check(
                    left.phi == right.phi and left.sigma == right.sigma,
                    f"counit naturality at {m!r}",
                )


@law(
    "zm.zh-mbool-equiv",
    "the clopen-inclusion functor and the point-space functor witness a dual "
    "equivalence between spaces and witnessing maps",
)
def _law_zh_mbool(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    npts = min(cfg.max_points, 3)
    for n in range(npts + 1):
        x = discrete_space(n)
        zm = functor_frakF(x)
        col.check(is_mz_map(zm).holds, f"inclusion image of {x!r}")
        col.check(
            eta_tilde_component(x).is_homeomorphism(), f"unit at {x!r}"
        )
    for zm in _mz_maps(eff):
        et = epsilon_tilde_component(zm)
        col.check(is_mbool_isomorphism(et), f"counit at {zm!r}")
    for m_pts in range(npts + 1):
        for n_pts in range(npts + 1):
            x, y = discrete_space(m_pts), discrete_space(n_pts)
            for f in all_point_maps(x, y):
                img = functor_frakF_on_map(f)
                col.check(
                    functor_frakG_on_mor(img) is not None, f"round trip of {f!r}"
                )
                lhs = compose_maps(eta_tilde_component(y), f)
                rhs = compose_maps(functor_frakG_on_mor(img), eta_tilde_component(x))
                col.check(lhs == rhs, f"unit naturality at {f!r}")


@law(
    "zm.recovery-5",
    "on compact instances the classical dualities are literally the "
    "restricted functor composites, and the restriction embeddings invert",
)
def _law_recovery5(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    npts = min(cfg.max_points, 3)
    for n in range(npts + 1):
        x = discrete_space(n)
        col.check(
            functor_E_inv(functor_F(x)) == clopen_algebra(x),
            f"clopen recovery at {x!r}",
        )
    for alg in _algebras(eff):
        col.check(
            functor_G(functor_E(alg)) == stone_space(alg).space,
            f"hom-space recovery at {alg!r}",
        )
        col.check(functor_E_inv(functor_E(alg)) == alg, f"E round trip at {alg!r}")
        col.check(functor_K_inv(functor_K(alg)) == alg, f"K round trip at {alg!r}")
    for a in _algebras(eff):
        for b in _algebras(eff):
            for phi in enumerate_homs(a, b):
                col.check(
                    functor_E_inv_on_mor(functor_E_on_hom(phi)) == phi,
                    f"E morphism round trip at {phi!r}",
                )
                col.check(
                    functor_K_inv_on_mor(functor_K_on_hom(phi)) == phi,
                    f"K morphism round trip at {phi!r}",
                )


@law(
    "zm.recovery-6",
    "the atom functor is the composite through the total-instance picture, "
    "its powerset-composite is the identity up to the atom-set unit, and the "
    "check map is a natural bijection",
)
def _law_recovery6(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for b in _algebras(eff):
        pts = functor_A(b)
        via_g = functor_G(functor_H_inv(b))
        inst = functor_H_inv(b)
        col.check(set(pts) == set(inst.homs), f"atom functor carrier at {b!r}")
        col.check(via_g == inst.subspace, f"atom functor topology at {b!r}")
        col.check(len(pts) == len(tuple(b.atoms())), f"check bijection at {b!r}")
        col.check(tarski_epsilon(b).is_iso(), f"powerset composite at {b!r}")
        col.check(functor_H(functor_H_inv(b)) == b, f"total-instance round trip at {b!r}")
        col.check(
            functor_H1(functor_H1_inv(b)) == b, f"total-map round trip at {b!r}"
        )
    for b in _algebras(eff):
        for b2 in _algebras(eff):
            for sigma in enumerate_homs(b, b2):
                amap = tarski_At(sigma)
                atoms1, atoms2 = tuple(b.atoms()), tuple(b2.atoms())
                idx = functor_A_on_sigma(sigma)
                ok = all(
                    atoms1[idx[j]] == amap[atoms2[j]] for j in range(len(atoms2))
                )
                col.check(ok, f"check naturality at {sigma!r}")
                m = functor_H_inv_on_sigma(sigma)
                col.check(m.phi == sigma, f"lift of {sigma!r}")
                m1 = functor_H1_inv_on_sigma(sigma)
                col.check(m1.phi == sigma, f"map-side lift of {sigma!r}")


@law(
    "zm.tdza-complete",
    "every morphism between total instances has a complete algebra part; "
    "automatic at finite scale and asserted anyway",
)
def _law_tdza_complete(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_atoms, 3, col, "max-atoms")
    if eff is None:
        return
    for a in _algebras(eff):
        for b in _algebras(eff):
            src, tgt = functor_H_inv(a), functor_H_inv(b)
            for m in enumerate_dza_morphisms(src, tgt):
                col.check(m.phi.is_complete, f"morphism {m!r}")


# -- symbolic laws ------------------------------------------------------------


@law(
    "sym.density",
    "every nonzero cylinder element contains a carrier point, produced "
    "deterministically",
    suites=("symbolic",),
)
def _law_sym_density(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    space = sym.default_space()
    done = 0
    while done < 200:
        e = sym.random_cyl_elem(rng)
        if e == sym.CYL_ZERO:
            continue
        done += 1
        p = sym.density_witness(e, space)
        col.check(space.contains(p) and sym.cyl_member(p, e), f"element {e!r}")


@law(
    "sym.ext-congruence",
    "extensional equality of parity pairs is an equivalence relation and a "
    "congruence for the Boolean operations",
    suites=("symbolic",),
)
def _law_sym_congruence(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    def blur(g: sym.ExtElem) -> sym.ExtElem:
        """An ext element equal to g as a point set but structurally different."""
        odd = sym.least_one_cell(1 + 2 * rng.randint(0, 2))
        even = sym.least_one_cell(2 * rng.randint(0, 2))
        return sym.ExtElem(
            sym.cyl_join(g.on_u, sym.cyl_meet(odd, sym.random_cyl_elem(rng, 4))),
            sym.cyl_join(g.off_u, sym.cyl_meet(even, sym.random_cyl_elem(rng, 4))),
        )

    for _ in range(100):
        a = sym.random_ext_elem(rng, 4)
        b = sym.random_ext_elem(rng, 4)
        a2, a3 = blur(a), blur(a)
        b2 = blur(b)
        col.check(sym.ext_equal(a, a), "reflexivity")
        col.check(sym.ext_equal(a, a2) and sym.ext_equal(a2, a), f"symmetry at {a!r}")
        col.check(
            not sym.ext_equal(a2, a3) or sym.ext_equal(a, a3),
            f"transitivity at {a!r}",
        )
        pairs_equal = sym.ext_equal(a, a2) and sym.ext_equal(b, b2)
        ops_agree = (
            sym.ext_equal(sym.ext_meet(a, b), sym.ext_meet(a2, b2))
            and sym.ext_equal(sym.ext_join(a, b), sym.ext_join(a2, b2))
            and sym.ext_equal(sym.ext_complement(a), sym.ext_complement(a2))
        )
        col.check(not pairs_equal or ops_agree, f"congruence at {a!r}, {b!r}")


@law(
    "sym.z-witness",
    "the cylinder algebra over the punctured carrier passes the positive-"
    "witness test on every probed element",
    suites=("symbolic",),
)
def _law_sym_z(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    space = sym.default_space()
    for e in sym.all_cyl_elems(2):
        if e == sym.CYL_ZERO:
            continue
        p = sym.density_witness(e, space)
        col.check(space.contains(p) and sym.cyl_member(p, e), f"element {e!r}")
    for _ in range(100):
        e = sym.random_cyl_elem(rng)
        if e == sym.CYL_ZERO:
            continue
        p = sym.density_witness(e, space)
        col.check(space.contains(p) and sym.cyl_member(p, e), f"element {e!r}")


@law(
    "sym.u-clopen-not-trace",
    "the even-least-one set is clopen in the punctured carrier yet is no "
    "cylinder trace: the failure certificate re-verifies",
    suites=("symbolic",),
)
def _law_sym_certificate(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    cert = sym.dz_failure_certificate(seed=cfg.seed)
    col.check(cert.cover_checks_hold, "parity cell cover")
    col.check(cert.pair_agrees_on_sampled_elems, "separating pair agreement")
    col.check(cert.pair_split_by_U, "separating pair split")
    col.check(cert.strictness_holds, "no bounded cylinder equals the parity set")
    col.check(cert.zero_point_obstruction_hold, "zero point blocks clopenness")
    col.check(sym.certificate_valid(cert), "certificate aggregate")


@law(
    "sym.t-equal-chain",
    "cylinder and parity-extension algebras refine each other on probed "
    "points: trace-equal yet distinct",
    suites=("symbolic",),
)
def _law_sym_tequal(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    col.check(sym.t_equal_witness_check(cfg.seed), "mutual refinement")
    for e in sym.all_cyl_elems(2):
        col.check(
            sym.ext_equal(sym.ext_embed(e), sym.ext_embed(e)),
            f"embedding fixed point at {e!r}",
        )
    col.check(
        all(
            not sym.ext_equal(sym.EXT_U, sym.ext_embed(e))
            for e in sym.all_cyl_elems(3)
        ),
        "strict growth",
    )


@law(
    "sym.dz-verdicts",
    "the trace-completeness decision reports failure with a certificate on "
    "the cylinder instance and stays undetermined on the extension",
    suites=("symbolic",),
)
def _law_sym_verdicts(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    verdict, cert = sym.symbolic_dz_verdict("cylinder")
    col.check(
        verdict == "fail" and cert is not None and sym.certificate_valid(cert),
        "cylinder verdict",
    )
    verdict2, cert2 = sym.symbolic_dz_verdict("extension")
    if verdict2 == "undetermined" and cert2 is None:
        col.undetermined("extension instance: no certificate either way")
    else:
        col.check(False, f"unexpected extension verdict {verdict2!r}")


# -- compactification laws ----------------------------------------------------


@law(
    "comp.category-laws",
    "identity and associativity hold for commuting-square morphisms of dense "
    "embeddings",
)
def _law_zcomp_category(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    cs = _compactifications(min(eff, 2))
    homsets: dict[tuple[int, int], tuple[comp.ZCompMorphism, ...]] = {}
    for i, c1 in enumerate(cs):
        for j, c2 in enumerate(cs):
            homsets[i, j] = comp.enumerate_zcomp_morphisms(c1, c2)
    for c in cs:
        ident = comp.identity_zcomp(c)
        col.check(
            comp.compose_zcomp(ident, ident).f == ident.f, f"identity at {c!r}"
        )
    for (i, j), ms12 in homsets.items():
        for m in ms12:
            col.check(
                comp.compose_zcomp(m, comp.identity_zcomp(cs[i])).f == m.f
                and comp.compose_zcomp(comp.identity_zcomp(cs[j]), m).g == m.g,
                f"unit laws at {m!r}",
            )
    for i in range(len(cs)):
        for j in range(len(cs)):
            for k in range(len(cs)):
                for l in range(len(cs)):
                    for m1 in homsets[i, j]:
                        for m2 in homsets[j, k]:
                            for m3 in homsets[k, l]:
                                lhs = comp.compose_zcomp(m3, comp.compose_zcomp(m2, m1))
                                rhs = comp.compose_zcomp(comp.compose_zcomp(m3, m2), m1)
                                col.check(
                                    lhs.f == rhs.f and lhs.g == rhs.g,
                                    f"associativity at {m1!r};{m2!r};{m3!r}",
                                )


@law(
    "comp.za-duality",
    "pulled-back-algebra and included-subspace functors are a dual "
    "equivalence at the two-atom contract scale: both round-trip components "
    "are isomorphisms and natural",
)
def _law_comp_za(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = min(cfg.max_atoms, 2)
    for inst in _z_instances(eff):
        sd = comp.s_dprime_component(inst)
        col.check(is_dza_isomorphism(sd), f"algebra-side component at {inst!r}")
    cs = _compactifications(eff)
    for c in cs:
        k = comp.kappa_component(c)
        col.check(
            k.f.is_homeomorphism() and k.g.is_homeomorphism(),
            f"space-side component at {c!r}",
        )
    for c1 in cs:
        for c2 in cs:
            for m in comp.enumerate_zcomp_morphisms(c1, c2):
                left = comp.compose_zcomp(comp.kappa_component(c2), m)
                right = comp.compose_zcomp(
                    comp.functor_Psi_on_mor(comp.functor_Phi_on_mor(m)),
                    comp.kappa_component(c1),
                )
                col.check(
                    left.f == right.f and left.g == right.g,
                    f"space-side naturality at {m!r}",
                )


@law(
    "comp.zbool-duality",
    "the same square objects are dually equivalent to witnessing maps via "
    "the trace-and-atom-mask components at the two-atom contract scale",
)
def _law_comp_zbool(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = min(cfg.max_atoms, 2)
    for h in _monos(eff):
        zm = ZMapInstance(h)
        if not is_z_map(zm).holds:
            continue
        up = comp.upsilon_component(zm)
        col.check(is_mbool_isomorphism(up), f"map-side component at {zm!r}")
    for c in _compactifications(eff):
        x = comp.xi_component(c)
        col.check(
            x.f.is_homeomorphism() and x.g.is_homeomorphism(),
            f"space-side component at {c!r}",
        )


@law(
    "comp.dwinger",
    "admissible open-base subalgebras order-correspond to dense embeddings; "
    "both composites are the identity and the order transports",
    suites=("finite", "symbolic"),
)
def _law_dwinger(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    if cfg.suite in ("finite", "all"):
        eff = min(cfg.max_points, 4)
        for n in range(eff + 1):
            x = discrete_space(n)
            adm = comp.admissible_algebras(x)
            col.check(
                adm == (full_power_subalgebra(n),),
                f"admissible poset at {n} points",
            )
            for a in adm:
                c = comp.dwinger_delta(a, x)
                col.check(c.is_valid, f"delta image at {n} points")
                col.check(
                    comp.dwinger_delta_prime(c) == a,
                    f"delta round trip at {n} points",
                )
                w = comp.dwinger_order(a, clopen_algebra(x), x)
                col.check(w.holds, f"greatest element at {n} points")
            b0 = comp.banaschewski_b0(x)
            for c in comp.relabeled_compactifications(b0):
                back = comp.dwinger_delta(comp.dwinger_delta_prime(c), x)
                col.check(
                    comp.compactification_equiv(back, c)[0],
                    f"delta-prime round trip at {n} points",
                )
    if cfg.suite in ("symbolic", "all"):
        rec = comp.symbolic_dwinger_chain(cfg.seed)
        col.check(rec.inclusion_strict, "chain strictness")
        col.check(rec.t_equal, "chain trace-equality")
        col.check(rec.both_admissible, "chain admissibility")
        col.check(rec.restriction_agrees, "ultrafilter restriction")
        col.check(rec.delta_prime_delta_identity, "witness-level round trip")
        verdict = comp.symbolic_compactification_equiv(
            comp.symbolic_cantor(), comp.symbolic_extension_target()
        )
        col.check(
            not verdict.equivalent and verdict.pair is not None,
            "chain inequivalence",
        )


@law(
    "comp.prop84",
    "a finite compactification isomorphic as a square object to the greatest "
    "one is equivalent to it",
)
def _law_prop84(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for n in range(eff + 1):
        x = discrete_space(n)
        b0 = comp.banaschewski_b0(x)
        for c in comp.relabeled_compactifications(b0):
            if comp.find_zcomp_isomorphism(c, b0) is not None:
                col.check(
                    comp.compactification_equiv(c, b0)[0],
                    f"relabeling at {n} points",
                )
            else:
                col.check(False, f"missing isomorphism at {n} points")


@law(
    "comp.cor88",
    "over finite discrete spaces every target is extremally disconnected and "
    "every dense embedding is a bijective relabeling",
)
def _law_cor88(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    eff = _eff(cfg.max_points, 4, col, "max-points")
    if eff is None:
        return
    for n in range(min(eff, 4) + 1):
        col.check(comp.ed_comp_check(discrete_space(n)), f"{n} points")


# -- harness self-checks ------------------------------------------------------


@law(
    "harness.report-deterministic",
    "rendering the same sub-suite twice yields byte-identical output",
    suites=("finite", "symbolic"),
)
def _law_determinism(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    sub_cfg = SuiteConfig(suite="finite", max_atoms=1, max_points=1, seed=cfg.seed)
    r1 = run_suite(sub_cfg, include_meta=False)
    r2 = run_suite(sub_cfg, include_meta=False)
    col.check(render_json(r1) == render_json(r2), "sub-suite render")
    col.check(render_text(r1) == render_text(r2), "sub-suite text render")


@law(
    "harness.law-ids-unique",
    "law identifiers are unique and every module contributes entries",
    suites=("finite", "symbolic"),
)
def _law_ids_unique(cfg: SuiteConfig, col: Collector, rng: random.Random) -> None:
    ids = [l.law_id for l in LAWS]
    col.check(len(ids) == len(set(ids)), "duplicate law id")
    prefixes = {"bool", "space", "dual", "za", "zm", "sym", "comp", "harness"}
    present = {i.split(".")[0] for i in ids}
    col.check(prefixes <= present, f"missing module prefixes {prefixes - present}")


# -- runner -------------------------------------------------------------------


@dataclass
class Report:
    config: SuiteConfig
    results: list[LawResult] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


def laws_for_suite(suite: str) -> list[Law]:
    if suite == "all":
        return list(LAWS)
    return [l for l in LAWS if suite in l.suites]


def run_suite(config: SuiteConfig, include_meta: bool = True) -> Report:
    report = Report(config)
    for l in laws_for_suite(config.suite):
        if not include_meta and l.law_id.startswith("harness."):
            continue
        result = LawResult(l.law_id, l.statement)
        col = Collector(result)
        rng = random.Random(f"{config.seed}:{l.law_id}")
        start = time.perf_counter()
        try:
            l.fn(config, col, rng)
        except SdlabError as exc:
            col.check(False, f"unexpected error: {type(exc).__name__}: {exc}")
        result.wall_time = time.perf_counter() - start
        report.results.append(result)
    return report


def render_text(report: Report) -> str:
    cfg = report.config
    lines = [
        f"suite: {cfg.suite}  max-atoms: {cfg.max_atoms}  "
        f"max-points: {cfg.max_points}  seed: {cfg.seed}",
        "",
    ]
    for r in report.results:
        head = f"[{r.status.upper():>12}] {r.law_id}"
        tallies = (
            f"instances={r.instances} passed={r.passed} "
            f"failed={r.failed} undetermined={r.undetermined}"
        )
        lines.append(f"{head}  {tallies}")
        lines.append(f"    {r.statement}")
        if r.skipped:
            lines.append(f"    skipped: {r.skip_reason}")
        if r.counterexample and r.status == "fail":
            lines.append(f"    first counterexample: {r.counterexample}")
        if r.counterexample and r.status != "fail" and r.undetermined:
            lines.append(f"    note: {r.counterexample}")
    n = len(report.results)
    by = {"pass": 0, "fail": 0, "undetermined": 0, "skipped": 0}
    for r in report.results:
        by[r.status] += 1
    lines.append("")
    lines.append(
        f"result: {'FAIL' if report.failures else 'PASS'} "
        f"({n} laws: {by['pass']} pass, {by['fail']} fail, "
        f"{by['undetermined']} undetermined, {by['skipped']} skipped)"
    )
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    from .serialize import json_dumps

    cfg = report.config
    payload = {
        "config": {
            "suite": cfg.suite,
            "max_atoms": cfg.max_atoms,
            "max_points": cfg.max_points,
            "seed": cfg.seed,
        },
        "laws": [
            {
                "id": r.law_id,
                "statement": r.statement,
                "status": r.status,
                "instances": r.instances,
                "passed": r.passed,
                "failed": r.failed,
                "undetermined": r.undetermined,
                "skip_reason": r.skip_reason,
                "counterexample": r.counterexample,
            }
            for r in report.results
        ],
        "summary": {
            "laws": len(report.results),
            "failures": report.failures,
        },
    }
    return json_dumps(payload)
