"""Command line entry point: ``nuschroder <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails (a witness goes to
stderr), 2 on usage or parse errors.  Output goes to stdout unless
``--output`` is given; a relative output path is resolved against
``$NUSCHRODER_OUTPUT_DIR`` when that variable is set.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bijections import forest_to_tree, left_flush, right_flush, tree_to_forest
from .enumeration import (
    enum_dyck,
    enum_large,
    enum_small,
    euler_alternating,
    large_counts,
    narayana_counts,
    rational_report,
    sch_counts,
)
from .forests import CoveringForest
from .morse import build_matching, find_cycle, matching_witness
from .paths import DomainError, ParseError, parse_nu
from .poset import build_path_poset, to_dot, to_json
from .trees import NuTree
from .verify import run_suite

OUTPUT_DIR_ENV = "NUSCHRODER_OUTPUT_DIR"


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_count(args):
    nu = parse_nu(args.nu)
    sch = sch_counts(nu)
    return 0, _dump(
        {
            "nu": str(nu),
            "sch": sch,
            "narayana": narayana_counts(nu),
            "large": large_counts(nu),
            "total_small": sum(sch),
            "total_large": sum(large_counts(nu)),
            "euler": euler_alternating(nu),
        }
    )


def _cmd_enumerate(args):
    nu = parse_nu(args.nu)
    if args.large:
        words = enum_large(nu)
    elif args.dyck:
        words = enum_dyck(nu)
    else:
        words = enum_small(nu)
    # the empty path prints as an empty line
    return 0, "".join(w + "\n" for w in words)


def _read_input(args) -> dict:
    text = Path(args.input).read_text() if args.input else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"input is not JSON: {err}") from None


def _cmd_convert(args):
    data = _read_input(args)
    try:
        if args.src == "path":
            tree = right_flush(data["word"], parse_nu(data["nu"]))
        elif args.src == "tree":
            tree = NuTree.from_json(data)
        else:
            tree = forest_to_tree(CoveringForest.from_json(data))
    except KeyError as err:
        raise UsageError(f"input is missing the field {err}") from None
    if args.dst == "path":
        out = {"nu": str(tree.base), "word": str(left_flush(tree))}
    elif args.dst == "tree":
        out = tree.to_json()
    else:
        out = tree_to_forest(tree).to_json()
    return 0, _dump(out)


def _cmd_poset(args):
    P = build_path_poset(parse_nu(args.nu))
    if args.format == "dot":
        return 0, to_dot(P)
    return 0, _dump(to_json(P))


def _cmd_morse(args):
    P = build_path_poset(parse_nu(args.nu))
    M = build_matching(P)
    status = 0
    reason = matching_witness(P, M)
    if reason:
        print(f"matching invalid over {P.base or '(empty)'}: {reason}", file=sys.stderr)
        status = 1
    else:
        cycle = find_cycle(P, M)
        if cycle:
            words = " -> ".join(P.labels[i] for i in cycle)
            print(f"matching has a cycle over {P.base or '(empty)'}: {words}", file=sys.stderr)
            status = 1
    if args.format == "dot":
        return status, to_dot(P, M)
    return status, _dump(M.to_json(P))


def _cmd_verify(args):
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    report = run_suite(args.max_len)
    for f in report.failures:
        print(f"FAIL {f}", file=sys.stderr)
    summary = {
        "max_len": report.max_len,
        "bases": report.bases,
        "failures": len(report.failures),
        "ok": report.ok,
    }
    return (0 if report.ok else 1), _dump(summary)


def _cmd_rational(args):
    report = rational_report(args.a, args.b)
    if not report["agree"]:
        print(f"closed forms disagree with enumeration for ({args.a},{args.b})", file=sys.stderr)
    return (0 if report["agree"] else 1), _dump(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nuschroder",
        description="Enumerate and verify nu-Schroder paths, trees, forests and their face posets.",
    )
    parser.add_argument("--output", "-o", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    nu_help = "base path as an N/E word or as a/b for the rational path"

    p = sub.add_parser("count", help="path counts by number of diagonal steps")
    p.add_argument("--nu", required=True, help=nu_help)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list paths, one per line")
    p.add_argument("--nu", required=True, help=nu_help)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--large", action="store_true", help="large paths instead of small ones")
    kind.add_argument("--dyck", action="store_true", help="Dyck paths only")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("convert", help="map a path, tree or forest given as JSON")
    p.add_argument("--from", dest="src", required=True, choices=["path", "tree", "forest"])
    p.add_argument("--to", dest="dst", required=True, choices=["path", "tree", "forest"])
    p.add_argument("--input", "-i", help="JSON file (default: stdin)")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("poset", help="face poset of small paths")
    p.add_argument("--nu", required=True, help=nu_help)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("morse", help="acyclic matching and its critical cells")
    p.add_argument("--nu", required=True, help=nu_help)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_morse)

    p = sub.add_parser("verify", help="run the invariant suite on all short base paths")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("rational", help="closed forms for coprime a, b against enumeration")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=_cmd_rational)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = args.func(args)
    except (ParseError, DomainError, UsageError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(text, args.output)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
