"""JSON wire formats and the single-functor dispatcher behind `dualize`.

Every dump is deterministic (sorted keys, fixed separators) so reports and
artifacts compare byte-for-byte.  Hom tables are keyed by the decimal string
of the element mask; set members and points are sorted position arrays.
"""

from __future__ import annotations

import json
from typing import Any

from . import compactify as comp
from . import symbolic as sym
from .boolalg import (
    BoolAlg,
    BoolHom,
    FinBoolAlg,
    SetSubalgebra,
    bit_positions,
)
from .dualities import stone_space, tarski_At, tarski_P_of_map
from .errors import ParseError, WrongSubcategoryError
from .finspace import (
    FinTopSpace,
    SpaceMap,
    clopen_algebra,
    discrete_space,
    generate_topology,
    space_predicates,
)
from .zalgebra import (
    ZAlgebraInstance,
    functor_F,
    functor_G,
    is_dz_algebra,
    is_z_algebra,
    z_instance,
)
from .zmaps import ZMapInstance, functor_Fprime, functor_Gprime, functor_frakF, functor_frakG, is_mz_map, is_z_map


def json_dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _mask_to_positions(mask: int) -> list[int]:
    return list(bit_positions(mask))


def _positions_to_mask(positions: list[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << int(p)
    return m


# -- dumps --------------------------------------------------------------------


def dump_algebra(alg: BoolAlg) -> dict:
    if isinstance(alg, FinBoolAlg):
        return {"kind": "power", "atoms": alg.atom_count}
    if isinstance(alg, SetSubalgebra):
        return {
            "kind": "subalgebra",
            "ground": alg.ground_size,
            "members": sorted(_mask_to_positions(m) for m in alg.members),
        }
    # any other carrier: dump as a subalgebra over its own atom count
    raise ParseError(f"cannot serialize algebra of type {type(alg).__name__}")


def dump_hom(h: BoolHom) -> dict:
    return {
        "kind": "hom",
        "domain": dump_algebra(h.domain),
        "codomain": dump_algebra(h.codomain),
        "table": {str(a): h.table[a] for a in h.domain.elements},
    }


def dump_space(s: FinTopSpace) -> dict:
    return {
        "kind": "space",
        "points": s.point_count,
        "basis": sorted(_mask_to_positions(u) for u in s.opens),
    }


def dump_map(f: SpaceMap) -> dict:
    return {
        "kind": "map",
        "domain": dump_space(f.dom),
        "codomain": dump_space(f.cod),
        "mapping": list(f.mapping),
    }


def dump_zalgebra(inst: ZAlgebraInstance) -> dict:
    return {
        "kind": "zalgebra",
        "algebra": dump_algebra(inst.algebra),
        "points": list(inst.point_idx),
    }


def dump_zmap(zm: ZMapInstance) -> dict:
    return {
        "kind": "zmap",
        "A": dump_algebra(zm.alpha.domain),
        "B": dump_algebra(zm.alpha.codomain),
        "alpha": {str(a): zm.alpha.table[a] for a in zm.alpha.domain.elements},
    }


def dump_cyl(e: sym.CylElem) -> dict:
    return {
        "kind": "cyl",
        "width": e.width,
        "minterms": sorted(
            "".join("1" if m >> i & 1 else "0" for i in range(e.width))
            for m in e.minterms
        ),
    }


def dump_compactification(c: comp.Compactification) -> dict:
    return {
        "kind": "compactification",
        "source": dump_space(c.source),
        "target": dump_space(c.target),
        "embedding": list(c.embedding.mapping),
    }


def dump_based_space(space: FinTopSpace, alg: SetSubalgebra) -> dict:
    return {
        "kind": "based_space",
        "space": dump_space(space),
        "algebra": dump_algebra(alg),
    }


def dump_object(obj: Any) -> dict:
    if isinstance(obj, BoolHom):
        return dump_hom(obj)
    if isinstance(obj, BoolAlg):
        return dump_algebra(obj)
    if isinstance(obj, FinTopSpace):
        return dump_space(obj)
    if isinstance(obj, SpaceMap):
        return dump_map(obj)
    if isinstance(obj, ZAlgebraInstance):
        return dump_zalgebra(obj)
    if isinstance(obj, ZMapInstance):
        return dump_zmap(obj)
    if isinstance(obj, sym.CylElem):
        return dump_cyl(obj)
    if isinstance(obj, comp.Compactification):
        return dump_compactification(obj)
    raise ParseError(f"cannot serialize object of type {type(obj).__name__}")


# -- parses -------------------------------------------------------------------


def _need(d: dict, key: str) -> Any:
    if key not in d:
        raise ParseError(f"missing field {key!r}")
    return d[key]


def parse_algebra(d: dict) -> BoolAlg:
    kind = _need(d, "kind")
    if kind == "power":
        return FinBoolAlg(int(_need(d, "atoms")))
    if kind == "subalgebra":
        members = frozenset(_positions_to_mask(m) for m in _need(d, "members"))
        return SetSubalgebra(int(_need(d, "ground")), members)
    raise ParseError(f"not an algebra kind: {kind!r}")


def parse_hom(d: dict) -> BoolHom:
    if _need(d, "kind") != "hom":
        raise ParseError("not a hom")
    dom = parse_algebra(_need(d, "domain"))
    cod = parse_algebra(_need(d, "codomain"))
    table = {int(k): int(v) for k, v in _need(d, "table").items()}
    return BoolHom(dom, cod, table)


def parse_space(d: dict) -> FinTopSpace:
    if _need(d, "kind") != "space":
        raise ParseError("not a space")
    n = int(_need(d, "points"))
    basis = [_positions_to_mask(u) for u in _need(d, "basis")]
    return generate_topology(n, basis)


def parse_map(d: dict) -> SpaceMap:
    if _need(d, "kind") != "map":
        raise ParseError("not a map")
    return SpaceMap(
        parse_space(_need(d, "domain")),
        parse_space(_need(d, "codomain")),
        tuple(int(x) for x in _need(d, "mapping")),
    )


def parse_zalgebra(d: dict) -> ZAlgebraInstance:
    if _need(d, "kind") != "zalgebra":
        raise ParseError("not a z-algebra instance")
    alg = parse_algebra(_need(d, "algebra"))
    return z_instance(alg, [int(i) for i in _need(d, "points")])


def parse_zmap(d: dict) -> ZMapInstance:
    if _need(d, "kind") != "zmap":
        raise ParseError("not a z-map instance")
    a = parse_algebra(_need(d, "A"))
    b = parse_algebra(_need(d, "B"))
    table = {int(k): int(v) for k, v in _need(d, "alpha").items()}
    return ZMapInstance(BoolHom(a, b, table))


def parse_cyl(d: dict) -> sym.CylElem:
    if _need(d, "kind") != "cyl":
        raise ParseError("not a cylinder element")
    return sym.cyl_from_strings(int(_need(d, "width")), _need(d, "minterms"))


def parse_compactification(d: dict) -> comp.Compactification:
    if _need(d, "kind") != "compactification":
        raise ParseError("not a compactification")
    src = parse_space(_need(d, "source"))
    tgt = parse_space(_need(d, "target"))
    emb = SpaceMap(src, tgt, tuple(int(x) for x in _need(d, "embedding")))
    return comp.Compactification(src, tgt, emb)


def parse_based_space(d: dict) -> tuple[FinTopSpace, SetSubalgebra]:
    if _need(d, "kind") != "based_space":
        raise ParseError("not a based space")
    space = parse_space(_need(d, "space"))
    alg = parse_algebra(_need(d, "algebra"))
    if not isinstance(alg, SetSubalgebra):
        raise ParseError("the base algebra must be a set subalgebra")
    return space, alg


def parse_object(d: Any) -> Any:
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object")
    d = {k: v for k, v in d.items() if k != "stamp"}
    kind = _need(d, "kind")
    parsers = {
        "power": parse_algebra,
        "subalgebra": parse_algebra,
        "hom": parse_hom,
        "space": parse_space,
        "map": parse_map,
        "zalgebra": parse_zalgebra,
        "zmap": parse_zmap,
        "cyl": parse_cyl,
        "compactification": parse_compactification,
        "based_space": parse_based_space,
    }
    if kind not in parsers:
        raise ParseError(f"unknown kind {kind!r}")
    return parsers[kind](d)


# -- the dualize dispatcher ---------------------------------------------------

FUNCTOR_ALIASES = {
    "S": "S",
    "T": "T",
    "P": "P",
    "At": "At",
    "F": "F",
    "G": "G",
    "Fprime": "Fprime",
    "F'": "Fprime",
    "Gprime": "Gprime",
    "G'": "Gprime",
    "frakF": "frakF",
    "frakG": "frakG",
    "Phi": "Phi",
    "Psi": "Psi",
    "PhiPrime": "PhiPrime",
    "Phi'": "PhiPrime",
    "PsiPrime": "PsiPrime",
    "Psi'": "PsiPrime",
    "Delta": "Delta",
    "DeltaPrime": "DeltaPrime",
    "Delta'": "DeltaPrime",
}


def _expect(obj: Any, cls: type, functor: str) -> Any:
    if not isinstance(obj, cls):
        raise WrongSubcategoryError(
            f"functor {functor} does not apply to {type(obj).__name__}"
        )
    return obj


def apply_functor(name: str, obj: Any) -> tuple[Any, dict]:
    """Apply one duality functor; returns the image and a verification stamp."""
    if name not in FUNCTOR_ALIASES:
        raise ParseError(f"unknown functor {name!r}")
    name = FUNCTOR_ALIASES[name]

    if name == "S":
        alg = _expect(obj, BoolAlg, name)
        st = stone_space(alg)
        p = space_predicates(st.space)
        return st.space, {
            "zero_dimensional": p.zero_dimensional,
            "t2": p.t2,
            "compact": p.compact,
        }
    if name == "T":
        space = _expect(obj, FinTopSpace, name)
        alg = clopen_algebra(space)
        return alg, {"member_count": len(alg.elements)}
    if name == "P":
        f = _expect(obj, SpaceMap, name)
        h = tarski_P_of_map(f)
        return h, {"hom_valid": h.is_valid_hom, "complete": h.is_complete}
    if name == "At":
        sigma = _expect(obj, BoolHom, name)
        atom_map = tarski_At(sigma)
        src_atoms = list(sigma.codomain.atoms())
        tgt_atoms = list(sigma.domain.atoms())
        mapping = tuple(tgt_atoms.index(atom_map[x]) for x in src_atoms)
        m = SpaceMap(
            discrete_space(len(src_atoms)), discrete_space(len(tgt_atoms)), mapping
        )
        return m, {"total": len(mapping) == len(src_atoms)}
    if name == "F":
        space = _expect(obj, FinTopSpace, name)
        inst = functor_F(space)
        return inst, {"dz": is_dz_algebra(inst).holds}
    if name == "G":
        inst = _expect(obj, ZAlgebraInstance, name)
        return functor_G(inst), {"z": True, "dz": True}
    if name == "Fprime":
        inst = _expect(obj, ZAlgebraInstance, name)
        zm = functor_Fprime(inst)
        return zm, {"mz": is_mz_map(zm).holds}
    if name == "Gprime":
        zm = _expect(obj, ZMapInstance, name)
        inst = functor_Gprime(zm)
        return inst, {"dz": is_dz_algebra(inst).holds}
    if name == "frakF":
        space = _expect(obj, FinTopSpace, name)
        zm = functor_frakF(space)
        return zm, {"mz": is_mz_map(zm).holds}
    if name == "frakG":
        zm = _expect(obj, ZMapInstance, name)
        return functor_frakG(zm), {"z": is_z_map(zm).holds}
    if name == "Phi":
        c = _expect(obj, comp.Compactification, name)
        inst = comp.functor_Phi(c)
        return inst, {"z": is_z_algebra(inst).holds}
    if name == "Psi":
        inst = _expect(obj, ZAlgebraInstance, name)
        c = comp.functor_Psi(inst)
        return c, {
            "dense": c.dense_flag,
            "embedding": c.embedding_flag,
            "target_stone": c.target_flag,
        }
    if name == "PhiPrime":
        c = _expect(obj, comp.Compactification, name)
        zm = comp.functor_PhiPrime(c)
        return zm, {"z": is_z_map(zm).holds}
    if name == "PsiPrime":
        zm = _expect(obj, ZMapInstance, name)
        c = comp.functor_PsiPrime(zm)
        return c, {
            "dense": c.dense_flag,
            "embedding": c.embedding_flag,
            "target_stone": c.target_flag,
        }
    if name == "Delta":
        if not (isinstance(obj, tuple) and len(obj) == 2):
            raise WrongSubcategoryError("Delta takes a based space")
        space, alg = obj
        c = comp.dwinger_delta(alg, space)
        return c, {
            "dense": c.dense_flag,
            "embedding": c.embedding_flag,
            "target_stone": c.target_flag,
        }
    if name == "DeltaPrime":
        c = _expect(obj, comp.Compactification, name)
        alg = comp.dwinger_delta_prime(c)
        return alg, {"admissible": True, "member_count": len(alg.elements)}
    raise ParseError(f"unhandled functor {name!r}")


def dualize_payload(name: str, payload: dict) -> dict:
    """File-level dualize: parse, apply, dump with a stamp attached."""
    obj = parse_object(payload)
    image, checks = apply_functor(name, obj)
    out = dump_object(image)
    out["stamp"] = {"functor": FUNCTOR_ALIASES[name], "checks": checks}
    return out
