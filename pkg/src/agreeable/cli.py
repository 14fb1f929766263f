"""Command-line interface.

Commands: ``analyze``, ``generate``, ``check``, ``bounds``, ``verify``.
Societies travel as JSON (see README for the format); ``analyze`` and
``check`` read from a file or stdin (``-``), ``generate`` writes to a file
or stdout, so generators pipe straight into analysis.

Exit codes: 0 success, 1 property violation (``verify`` only), 2 usage or
data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .agreeability import AgreeParams, is_km_agreeable
from .agreement import agreement
from .bounds import (
    BoundSheet,
    bound_sheet,
    clique_bound,
    coord_str,
    decimal_str,
    division,
    fractional_helly_bound,
    proportion_bound,
    small_m_bound,
)
from .errors import CapExceededError
from .generators import (
    RandomConfig,
    clique_plus_isolated,
    disjoint_cliques,
    extremal_linear,
    five_cycle_boxes,
    random_society,
)
from .society import Society, dumps_society, loads_society, validate
from .verify import SUITES, run_suites


def _read_society(path: str) -> Society:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    society = loads_society(text)
    violations = validate(society)
    if violations:
        raise ValueError("invalid society: " + "; ".join(violations))
    return society


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _print_sheet_text(sheet: BoundSheet) -> None:
    if sheet.vacuous:
        witness = ",".join(sheet.agreeability_witness or ())
        print(f"(k,m)=({sheet.params.k},{sheet.params.m}): NOT agreeable (witness {witness}); bounds vacuous")
        return
    print(f"(k,m)=({sheet.params.k},{sheet.params.m}): agreeable")
    for entry in sheet.entries:
        if not entry.applicable:
            print(f"  {entry.name}: not applicable ({entry.note})")
            continue
        status = "satisfied" if entry.satisfied else "VIOLATED"
        print(f"  {entry.name}: {entry.value} -> {status}")


def cmd_analyze(args: argparse.Namespace) -> int:
    society = _read_society(args.society)
    report = agreement(society)
    sheet = None
    if args.k is not None or args.m is not None:
        if args.k is None or args.m is None:
            raise ValueError("provide both --k and --m or neither")
        sheet = bound_sheet(society, AgreeParams(args.k, args.m))

    if args.format == "json":
        obj = report.to_obj()
        if sheet is not None:
            obj["bound_sheet"] = sheet.to_obj()
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(f"voters: {report.n}")
        print(f"agreement number: {report.agreement_number}")
        print(
            f"agreement proportion: {coord_str(report.proportion)}"
            f" (~{decimal_str(report.proportion)})"
        )
        witnesses = ", ".join(str(w) if not isinstance(w, tuple) else
                              "(" + ", ".join(coord_str(x) for x in w) + ")"
                              for w in report.witnesses)
        print(f"witness platforms: {witnesses if witnesses else '(none)'}")
        if report.per_candidate is not None:
            for c, count in report.per_candidate.items():
                print(f"  candidate {coord_str(c)}: {count} approvals")
        if sheet is not None:
            _print_sheet_text(sheet)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    society = _read_society(args.society)
    result = is_km_agreeable(society, AgreeParams(args.k, args.m))
    if args.format == "json":
        obj = {
            "k": args.k,
            "m": args.m,
            "agreeable": result.agreeable,
            "witness": list(result.witness) if result.witness else None,
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif result.agreeable:
        print(f"({args.k},{args.m})-agreeable: yes")
    else:
        print(f"({args.k},{args.m})-agreeable: no (witness {','.join(result.witness)})")
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    params = AgreeParams(args.k, args.m)
    obj: dict = {"k": args.k, "m": args.m}
    div = division(params)
    obj["q"] = div.q
    obj["rho"] = div.rho
    obj["proportion_bound"] = coord_str(proportion_bound(params))
    if args.n is not None:
        obj["n"] = args.n
        obj["clique_bound"] = clique_bound(args.n, params)
        if params.m <= 2 * params.k - 2:
            obj["small_m_bound"] = small_m_bound(args.n, params)
    if args.d is not None and args.m > args.d:
        fh = fractional_helly_bound(args.d, params)
        lo, hi = fh.enclosure()
        obj["fractional_helly"] = {
            "radicand": coord_str(fh.radicand),
            "degree": fh.degree,
            "enclosure": [decimal_str(lo), decimal_str(hi)],
        }
    if args.format == "json":
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for key, value in obj.items():
            print(f"{key}: {value}")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.generator == "extremal":
        society = extremal_linear(args.n, AgreeParams(args.k, args.m))
    elif args.generator == "clique-isolated":
        society = clique_plus_isolated(args.n, AgreeParams(args.k, args.m))
    elif args.generator == "disjoint-cliques":
        society = disjoint_cliques(args.n, AgreeParams(args.k, args.m))
    elif args.generator == "five-cycle-boxes":
        society = five_cycle_boxes()
    else:
        config = RandomConfig(
            coord_min=args.coord_min,
            coord_max=args.coord_max,
            min_length=args.min_length,
            max_length=args.max_length,
            empty_percent=args.empty_percent,
            num_candidates=args.num_candidates,
            dimension=args.d,
        )
        society = random_society(args.kind, args.n, args.seed, config)
    _write_output(dumps_society(society), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suites(args.suite, args.trials, args.seed, args.failure_dir)
    if args.format == "json":
        print(json.dumps(report.to_obj(), separators=(",", ":")))
    else:
        for r in report.results:
            status = "PASS" if r.ok else "FAIL"
            print(f"{r.suite}/{r.name}: checked={r.checked} violations={len(r.violations)} {status}")
            for v in r.violations:
                print(f"  violation: {v}")
        total = sum(r.checked for r in report.results)
        print(f"RESULT {'PASS' if report.ok else 'FAIL'} ({len(report.results)} properties, {total} checks)")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agreeable",
        description="Agreement numbers, (k,m)-agreeability and bounds for interval/box approval societies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="agreement report (and bound sheet with --k/--m) for a society file")
    p.add_argument("society", help="society JSON file, or - for stdin")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="(k,m)-agreeability verdict for a society file")
    p.add_argument("society", help="society JSON file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="evaluate the bound formulas without a society")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="emit a society as JSON")
    gen = p.add_subparsers(dest="generator", required=True)

    for name in ("extremal", "clique-isolated", "disjoint-cliques"):
        g = gen.add_parser(name)
        g.add_argument("--n", type=int, required=True)
        g.add_argument("--k", type=int, required=True)
        g.add_argument("--m", type=int, required=True)
        g.add_argument("--out")
        g.set_defaults(func=cmd_generate)

    g = gen.add_parser("five-cycle-boxes")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    g = gen.add_parser("random")
    g.add_argument("--kind", choices=("line", "candidates", "box"), default="line")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--d", type=int, default=2, help="dimension for --kind box")
    g.add_argument("--coord-min", type=int, default=0)
    g.add_argument("--coord-max", type=int, default=12)
    g.add_argument("--min-length", type=int, default=0)
    g.add_argument("--max-length", type=int, default=8)
    g.add_argument("--empty-percent", type=int, default=0)
    g.add_argument("--num-candidates", type=int, default=6)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument(
        "--failure-dir",
        default=".",
        help="write failing instances here for replay (default: current directory)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
