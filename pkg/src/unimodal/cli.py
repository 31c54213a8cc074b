"""Command-line front end: ``unimodal check|suite|scan|report``.

Exit codes: 0 when every expectation is met, 1 when a theorem row fails,
2 for usage errors (unknown scenario, bad parameter, resource cap hit).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from .series import MemoryLimitError
from .verifier import (
    CATEGORIES,
    SCENARIOS,
    UnknownScenario,
    emit_report,
    exit_status,
    get_scenario,
    run_scenario,
    run_suite,
)

USAGE_ERROR = 2


def _parse_value(text: str) -> Any:
    if "," in text:
        return tuple(_parse_value(t) for t in text.split(",") if t)
    if text.lower() in ("inf", "infinity"):
        return float("inf")
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, 'inf' or a comma list, got {text!r}")


def _parse_param(text: str) -> tuple[str, Any]:
    key, sep, val = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), _parse_value(val.strip())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unimodal", description="Exact unimodality checks for q-series.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run one scenario")
    c.add_argument("scenario", help=f"one of: {', '.join(sorted(SCENARIOS))}")
    c.add_argument("--omax", type=int, help="truncation order of the outer variable")
    c.add_argument("--zmax", type=int, help="z bound for G_{k,n}")
    c.add_argument("--param", type=_parse_param, action="append", default=[], metavar="K=V")
    c.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("suite", help="run a group of scenarios")
    s.add_argument("--filter", choices=CATEGORIES)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("text", "json"), default="text")

    sc = sub.add_parser("scan", help="extend a conjecture scan to a larger bound")
    sc.add_argument("scenario")
    sc.add_argument("--max", type=int, required=True, dest="max_bound")
    sc.add_argument("--format", choices=("text", "json"), default="text")

    r = sub.add_parser("report", help="run every scenario and write a report")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--out", type=Path)
    r.add_argument("--filter", choices=CATEGORIES)
    r.add_argument("--jobs", type=int, default=1)
    return p


def _write(text: str, out: Path | None = None) -> None:
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n", encoding="utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            overrides = dict(args.param)
            if args.omax is not None:
                overrides["omax"] = args.omax
            if args.zmax is not None:
                overrides["zmax"] = args.zmax
            results = [run_scenario(args.scenario, overrides)]
        elif args.command == "scan":
            sc = get_scenario(args.scenario)
            if sc.scan_key is None:
                raise ValueError(f"{sc.id} is not a scannable conjecture row")
            results = [run_scenario(sc.id, {sc.scan_key: args.max_bound})]
            # scans report, they never assert
            _write(emit_report(results, args.format))
            return 0
        else:
            results = run_suite(args.filter, args.jobs)
    except UnknownScenario as e:
        print(f"error: unknown scenario {e.args[0]!r}", file=sys.stderr)
        return USAGE_ERROR
    except MemoryLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    _write(emit_report(results, args.format), getattr(args, "out", None))
    return exit_status(results)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
