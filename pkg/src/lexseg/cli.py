"""Command-line front end.

Subcommands: ass, oracle-ass, decompose, depth, filtration, stanley,
sweep. Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .closed_form import associated_primes_lexsegment
from .decompose import associated_primes_oracle, irreducible_decomposition
from .depth import depth_class, depth_exact
from .filtration import (
    disjoint_cover_check,
    greedy_filtration,
    max_witness_degree,
    sdepth_lower_bound,
    search_filtration,
    staged_filtration,
    stanley_decomposition,
    supp_equals_ass,
    verify_pretty_clean,
    verify_prime_filtration,
)
from .monomials import (
    DimensionError,
    LexSpec,
    MonomialIdeal,
    SpecError,
    SpecKind,
    classify,
    lexsegment_generators,
    reduce_fully,
)
from .serialize import ParseError
from .sweep import DEFAULT_CAP, DEFAULT_PRIMES, SweepCapExceeded, sweep

USAGE_ERROR = 2
MISMATCH = 1


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _load_spec(args) -> LexSpec:
    u = serialize.parse_monomial(args.u, args.n)
    v = serialize.parse_monomial(args.v, args.n)
    return LexSpec(args.n, args.d, u, v)


def _load_ideal(path: str) -> MonomialIdeal:
    with open(path) as fh:
        return serialize.ideal_from_json(json.load(fh))


def _emit(payload, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        _emit_text(payload)


def _emit_text(payload, indent: str = "") -> None:
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            _emit_text(value, indent)
    else:
        print(f"{indent}{payload}")


def _cmd_ass(args) -> int:
    spec = _load_spec(args)
    out: dict = {"n": spec.n, "d": spec.d, "u": args.u, "v": args.v}
    status = 0
    if args.method in ("closed", "both"):
        out["closed"] = serialize.primes_to_json(associated_primes_lexsegment(spec))
    if args.method in ("oracle", "both"):
        ideal = lexsegment_generators(spec)
        out["oracle"] = serialize.primes_to_json(
            associated_primes_oracle(ideal).primes
        )
    if args.method == "both" and out["closed"] != out["oracle"]:
        out["mismatch"] = True
        status = MISMATCH
    _emit(out, args.json)
    return status


def _cmd_oracle_ass(args) -> int:
    ideal = _load_ideal(args.ideal)
    result = associated_primes_oracle(ideal)
    out = {
        "ideal": serialize.ideal_to_json(ideal),
        "primes": serialize.primes_to_json(result.primes),
        "witnesses": [
            {"prime": list(p.vars), "witness": list(w)} for p, w in result.witnesses
        ],
    }
    _emit(out, True)
    return 0


def _cmd_decompose(args) -> int:
    ideal = _load_ideal(args.ideal)
    comps = irreducible_decomposition(ideal)
    out = {
        "ideal": serialize.ideal_to_json(ideal),
        "components": sorted(
            [[list(pair) for pair in c.powers] for c in comps]
        ),
    }
    _emit(out, True)
    return 0


def _cmd_depth(args) -> int:
    if args.ideal:
        ideal = _load_ideal(args.ideal)
        out = {"ideal": serialize.ideal_to_json(ideal)}
        out["depth_exact"] = depth_exact(ideal, args.p)
        _emit(out, True)
        return 0
    spec = _load_spec(args)
    out = {"n": spec.n, "d": spec.d, "u": args.u, "v": args.v}
    work, _, offset = reduce_fully(spec)
    kind = classify(work).kind
    out["class"] = kind.value
    if kind == SpecKind.ARBITRARY and work.d > 1:
        case = depth_class(work)
        out["depth_class"] = case.depth.name
        if case.subcase:
            out["subcase"] = case.subcase
    if args.exact:
        out["depth_exact"] = depth_exact(lexsegment_generators(spec), args.p)
    _emit(out, True)
    return 0


def _cmd_filtration(args) -> int:
    spec = _load_spec(args)
    ideal = lexsegment_generators(spec)
    if args.strategy == "greedy":
        filtration = greedy_filtration(ideal)
    elif args.strategy == "search":
        filtration = search_filtration(ideal)
        if filtration is None:
            print("no pretty clean filtration found", file=sys.stderr)
            return MISMATCH
    else:
        filtration = staged_filtration(spec)
    out = serialize.filtration_to_json(filtration)
    status = 0
    if args.verify:
        reports = {
            "prime_filtration": verify_prime_filtration(filtration),
            "pretty_clean": verify_pretty_clean(filtration),
            "supp_equals_ass": supp_equals_ass(filtration),
        }
        out["verification"] = {
            name: {"ok": r.ok, "violations": list(r.violations)}
            for name, r in reports.items()
        }
        if not all(r.ok for r in reports.values()):
            status = MISMATCH
    _emit(out, True)
    return status


def _cmd_stanley(args) -> int:
    spec = _load_spec(args)
    ideal = lexsegment_generators(spec)
    filtration = staged_filtration(spec)
    decomposition = stanley_decomposition(filtration)
    bound = (
        args.degree_bound
        if args.degree_bound is not None
        else spec.d + max_witness_degree(filtration) + 2
    )
    cover = disjoint_cover_check(ideal, decomposition, bound)
    out = {
        "spaces": [
            {"witness": list(w), "free_vars": sorted(free)}
            for w, free in decomposition.spaces
        ],
        "sdepth_lower_bound": sdepth_lower_bound(decomposition),
        "degree_bound": bound,
        "cover_ok": cover.ok,
        "cover_violations": list(cover.violations),
    }
    _emit(out, True)
    return 0 if cover.ok else MISMATCH


def _cmd_sweep(args) -> int:
    primes = tuple(int(p) for p in args.p.split(","))
    try:
        report = sweep(
            _parse_range(args.n),
            _parse_range(args.d),
            primes=primes,
            jobs=args.jobs,
            cap=args.cap,
        )
    except SweepCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    payload = report.to_json()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
    summary = {
        "specs_tested": report.specs_tested,
        "agreements": report.agreements,
        "mismatches": report.specs_tested - report.agreements,
        "seconds": round(report.seconds, 3),
    }
    _emit(summary, False)
    for m in report.mismatches:
        print(f"mismatch: n={m.n} d={m.d} u={m.u} v={m.v} [{m.family}] {m.detail}")
    return 0 if report.ok else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexseg",
        description="Associated primes and pretty clean filtrations of lexsegment ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--u", required=True)
        p.add_argument("--v", required=True)

    p = sub.add_parser("ass", help="associated primes of a lexsegment ideal")
    add_spec_args(p)
    p.add_argument("--method", choices=["closed", "oracle", "both"], default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ass)

    p = sub.add_parser("oracle-ass", help="associated primes of any monomial ideal")
    p.add_argument("--ideal", required=True, help="ideal JSON file")
    p.set_defaults(func=_cmd_oracle_ass)

    p = sub.add_parser("decompose", help="irreducible decomposition")
    p.add_argument("--ideal", required=True, help="ideal JSON file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("depth", help="depth classification / exact depth")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--ideal", help="ideal JSON file (implies --exact)")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--p", type=int, default=32003)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("filtration", help="prime filtration of S/I")
    add_spec_args(p)
    p.add_argument(
        "--strategy", choices=["greedy", "staged", "search"], default="staged"
    )
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_filtration)

    p = sub.add_parser("stanley", help="Stanley decomposition and sdepth bound")
    add_spec_args(p)
    p.add_argument("--degree-bound", type=int, default=None)
    p.set_defaults(func=_cmd_stanley)

    p = sub.add_parser("sweep", help="exhaustive verification sweep")
    p.add_argument("--n", required=True, help="range LO..HI")
    p.add_argument("--d", required=True, help="range LO..HI")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--p", default=",".join(str(p) for p in DEFAULT_PRIMES))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", help="write the full report to this file")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if args.command == "depth" and not args.ideal:
        if args.n is None or args.d is None or not args.u or not args.v:
            print("depth needs --ideal or all of --n/--d/--u/--v", file=sys.stderr)
            return USAGE_ERROR
    try:
        return args.func(args)
    except (ParseError, SpecError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
