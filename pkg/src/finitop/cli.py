"""Command-line surface.

Exit codes: 0 on success with all checks passing, 1 when a verification
check fails or a mine target that asserts emptiness finds witnesses, 2 on
invalid input or arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from finitop import enumeration, serialize
from finitop.errors import FinitopError
from finitop.groups import builtin_group
from finitop.suite import Bounds, run_suite


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise FinitopError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FinitopError(f"{path} is not valid JSON: {exc}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_enumerate_spaces(args) -> int:
    stream = enumeration.enumerate_topologies(args.points)
    if args.up_to_iso:
        stream = enumeration.canonical_up_to_homeomorphism(stream)
    lines = "".join(space.matrix_string() + "\n" for space in stream)
    _write_text(args.dump, lines)
    return 0


def _cmd_enumerate_group_topologies(args) -> int:
    group = builtin_group(args.group)
    out = []
    for gwt in enumeration.enumerate_group_topologies(group):
        record = {
            "matrix": gwt.space.matrix_string(),
            "opens": gwt.space.opens_as_points(),
            "profile": gwt.profile().as_dict(),
        }
        out.append(json.dumps(record) + "\n")
    _write_text(args.dump, "".join(out))
    return 0


def _cmd_classify(args) -> int:
    payload = serialize.classify_payload(_load_json(args.input))
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args) -> int:
    bounds = Bounds(
        max_points=args.max_points,
        max_order=args.max_order,
        groups=tuple(args.groups.split(",")) if args.groups else (),
        jobs=args.jobs,
        inject_failure=args.inject_failure,
    )
    report = run_suite(args.suite, bounds)
    for check in report.checks:
        print(
            f"{check.status.upper():7s} {check.check_id} "
            f"(population={check.population})",
            file=sys.stderr,
        )
    text = report.to_json() + "\n"
    print(text, end="")
    if args.report:
        _write_text(args.report, text)
    return 0 if report.all_passed else 1


def _cmd_mine(args) -> int:
    groups = (
        tuple(args.groups.split(","))
        if args.groups
        else enumeration.DEFAULT_GROUP_SPECS
    )
    result = enumeration.mine(
        args.target,
        max_points=args.max_points,
        max_order=args.max_order,
        groups=groups,
    )
    payload = {
        "target": result.target.name,
        "description": result.target.description,
        "expect_none": result.target.expect_none,
        "universe": result.universe,
        "population": result.population,
        "witnesses": list(result.witnesses),
        "certificate": result.certificate(),
    }
    print(json.dumps(payload, indent=2))
    return 1 if result.violates_expectation else 0


def _cmd_inspect(args) -> int:
    obj = _load_json(args.input)
    if isinstance(obj, dict) and "group" in obj:
        space = serialize.gwt_from_json(obj).space
    else:
        space = serialize.space_from_json(obj)
    _write_text(args.dot, serialize.space_to_dot(space))
    summary = {
        "points": space.point_count,
        "opens_count": len(space.opens),
        "matrix": space.matrix_string(),
    }
    print(json.dumps(summary, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finitop",
        description="Finite spaces, groups with topology, and theorem sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="enumerate structures")
    enum_sub = enum.add_subparsers(dest="what", required=True)

    spaces = enum_sub.add_parser("spaces", help="all topologies on n labeled points")
    spaces.add_argument("--points", type=int, required=True)
    spaces.add_argument("--up-to-iso", action="store_true")
    spaces.add_argument("--dump", metavar="FILE", default=None)
    spaces.set_defaults(fn=_cmd_enumerate_spaces)

    gt = enum_sub.add_parser(
        "group-topologies", help="semitopological topologies on a builtin group"
    )
    gt.add_argument("--group", required=True, metavar="SPEC")
    gt.add_argument("--dump", metavar="FILE", default=None)
    gt.set_defaults(fn=_cmd_enumerate_group_topologies)

    classify = sub.add_parser("classify", help="classify a space or group JSON file")
    classify.add_argument("--input", required=True, metavar="FILE")
    classify.set_defaults(fn=_cmd_classify)

    verify = sub.add_parser("verify", help="run a theorem suite")
    verify.add_argument(
        "--suite", required=True, choices=("spaces", "maps", "groups", "all")
    )
    verify.add_argument("--max-points", type=int, default=4)
    verify.add_argument("--max-order", type=int, default=8)
    verify.add_argument(
        "--groups",
        default=",".join(enumeration.DEFAULT_GROUP_SPECS),
        metavar="LIST",
        help="comma-separated builtin group specs",
    )
    verify.add_argument("--jobs", type=int, default=1, metavar="K")
    verify.add_argument("--report", metavar="FILE", default=None)
    verify.add_argument(
        "--inject-failure", action="store_true", help=argparse.SUPPRESS
    )
    verify.set_defaults(fn=_cmd_verify)

    mine = sub.add_parser("mine", help="search a bounded universe for witnesses")
    mine.add_argument(
        "--target", required=True, choices=sorted(enumeration.MINING_TARGETS)
    )
    mine.add_argument("--max-points", type=int, default=enumeration.MAX_ENUM_POINTS)
    mine.add_argument("--max-order", type=int, default=enumeration.MAX_GROUP_ORDER)
    mine.add_argument("--groups", default=None, metavar="LIST")
    mine.set_defaults(fn=_cmd_mine)

    inspect = sub.add_parser("inspect", help="summarize a space and export DOT")
    inspect.add_argument("--input", required=True, metavar="FILE")
    inspect.add_argument("--dot", required=True, metavar="FILE")
    inspect.set_defaults(fn=_cmd_inspect)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FinitopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
