"""Command line front end.

Exit codes: 0 success (undetermined entries allowed), 1 failed laws or a
negative check, 2 usage, parse, or precondition errors.  Set
SDL_BOUNDS_OVERRIDE to comma-separated key=value pairs (for example
"max_atoms=2,max_points=3") to clamp suite bounds from the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import compactify as comp
from . import serialize
from .errors import ParseError, SdlabError
from .finspace import discrete_space
from .harness import Report, SuiteConfig, render_json, render_text, run_suite

BOUNDS_ENV = "SDL_BOUNDS_OVERRIDE"


def _env_overrides() -> dict[str, int]:
    raw = os.environ.get(BOUNDS_ENV, "")
    out: dict[str, int] = {}
    if not raw:
        return out
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ParseError(f"{BOUNDS_ENV} entries must look like key=value: {part!r}")
        key, value = part.split("=", 1)
        key = key.strip().replace("-", "_")
        if key not in ("max_atoms", "max_points"):
            raise ParseError(f"{BOUNDS_ENV} cannot override {key!r}")
        out[key] = int(value)
    return out


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_payload(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    overrides = _env_overrides()
    config = SuiteConfig(
        suite=args.suite,
        max_atoms=overrides.get("max_atoms", args.max_atoms),
        max_points=overrides.get("max_points", args.max_points),
        seed=args.seed,
        output=args.out,
    )
    report = run_suite(config)
    text = render_json(report) if args.format == "json" else render_text(report)
    _write_or_print(text, args.out)
    return report.exit_code


def cmd_dualize(args: argparse.Namespace) -> int:
    payload = _load_payload(args.input)
    result = serialize.dualize_payload(args.functor, payload)
    _write_or_print(serialize.json_dumps(result), args.out)
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    """Apply the canonical round trip for the input's kind and verify the
    comparison component."""
    payload = _load_payload(args.input)
    obj = serialize.parse_object(payload)
    from .boolalg import BoolAlg
    from .dualities import stone_map, t_component
    from .finspace import FinTopSpace, space_predicates
    from .zalgebra import ZAlgebraInstance, is_dz_algebra, s_prime_component, is_dza_isomorphism
    from .zmaps import ZMapInstance, epsilon_prime_component, is_mbool_isomorphism, is_mz_map
    from . import symbolic as sym

    checks: dict[str, bool] = {}
    if isinstance(obj, BoolAlg):
        checks["base_map_iso"] = stone_map(obj).is_iso()
    elif isinstance(obj, FinTopSpace):
        p = space_predicates(obj)
        checks["zero_dimensional_t2"] = p.zero_dimensional and p.t2
        if checks["zero_dimensional_t2"]:
            checks["evaluation_homeo"] = t_component(obj).is_homeomorphism()
    elif isinstance(obj, ZAlgebraInstance):
        checks["dz"] = is_dz_algebra(obj).holds
        if checks["dz"]:
            checks["trace_component_iso"] = is_dza_isomorphism(s_prime_component(obj))
    elif isinstance(obj, ZMapInstance):
        checks["mz"] = is_mz_map(obj).holds
        if checks["mz"]:
            checks["counit_iso"] = is_mbool_isomorphism(epsilon_prime_component(obj))
    elif isinstance(obj, comp.Compactification):
        k = comp.kappa_component(obj)
        checks["round_trip_iso"] = k.f.is_homeomorphism() and k.g.is_homeomorphism()
    elif isinstance(obj, sym.CylElem):
        cert = sym.dz_failure_certificate()
        checks["certificate_valid"] = sym.certificate_valid(cert)
    else:
        raise ParseError(f"no round trip defined for {type(obj).__name__}")
    out = {"kind": "roundtrip", "input_kind": payload.get("kind"), "checks": checks}
    _write_or_print(serialize.json_dumps(out), args.out)
    return 0 if all(checks.values()) else 1


def cmd_dwinger(args: argparse.Namespace) -> int:
    if args.symbolic:
        rec = comp.symbolic_dwinger_chain(args.seed)
        ok = all(
            (
                rec.inclusion_strict,
                rec.t_equal,
                rec.both_admissible,
                rec.restriction_agrees,
                rec.delta_prime_delta_identity,
            )
        )
        payload = {
            "kind": "dwinger_symbolic",
            "inclusion_strict": rec.inclusion_strict,
            "t_equal": rec.t_equal,
            "both_admissible": rec.both_admissible,
            "restriction_agrees": rec.restriction_agrees,
            "delta_prime_delta_identity": rec.delta_prime_delta_identity,
        }
        _write_or_print(serialize.json_dumps(payload), args.out)
        return 0 if ok else 1
    if args.input:
        space = serialize.parse_space(_load_payload(args.input))
    elif args.discrete is not None:
        space = discrete_space(args.discrete)
    else:
        raise ParseError("dwinger needs an input space file, --discrete, or --symbolic")
    algebras = comp.admissible_algebras(space)
    entries = []
    ok = True
    for a in algebras:
        c = comp.dwinger_delta(a, space)
        round_trip = comp.dwinger_delta_prime(c) == a
        ok = ok and round_trip and c.is_valid
        entries.append(
            {
                "algebra": serialize.dump_algebra(a),
                "target_points": c.target.point_count,
                "round_trip": round_trip,
            }
        )
    payload = {
        "kind": "dwinger_poset",
        "space": serialize.dump_space(space),
        "admissible": entries,
    }
    _write_or_print(serialize.json_dumps(payload), args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdlab",
        description="verify duality laws on finite and symbolic instances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a law suite")
    p_verify.add_argument("--suite", choices=("finite", "symbolic", "all"), default="finite")
    p_verify.add_argument("--max-atoms", type=int, default=3)
    p_verify.add_argument("--max-points", type=int, default=4)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(fn=cmd_verify)

    p_dualize = sub.add_parser("dualize", help="apply one duality functor to a file")
    p_dualize.add_argument("input")
    p_dualize.add_argument("--functor", required=True)
    p_dualize.add_argument("--out", default=None)
    p_dualize.set_defaults(fn=cmd_dualize)

    p_round = sub.add_parser("roundtrip", help="apply and verify a canonical round trip")
    p_round.add_argument("input")
    p_round.add_argument("--out", default=None)
    p_round.set_defaults(fn=cmd_roundtrip)

    p_dw = sub.add_parser("dwinger", help="compute an admissible-algebra poset")
    p_dw.add_argument("input", nargs="?", default=None)
    p_dw.add_argument("--discrete", type=int, default=None)
    p_dw.add_argument("--symbolic", action="store_true")
    p_dw.add_argument("--seed", type=int, default=0)
    p_dw.add_argument("--out", default=None)
    p_dw.set_defaults(fn=cmd_dwinger)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SdlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
