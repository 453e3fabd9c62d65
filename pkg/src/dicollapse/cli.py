"""Command-line front end.

    dicollapse generate --builtin swiss_flag --out sf.json
    dicollapse generate --pv prog.json --out K.json
    dicollapse analyze --in sf.json --start 0,0 [--json report.json] [--dump-links]
    dicollapse analyze --in sf.json --reach 0,0 [--final 5,5]
    dicollapse collapse --mode 0 --start 0,0 --preserve 0,0 --preserve 5,5 \\
        --in sf.json --out sf2.json --log steps.json [--vertex-pairs]
    dicollapse check-pair --in grid.json --start 0,0 --tau 1,3:2,3 --sigma 1,2:2,3
    dicollapse export --in sf.json --tikz sf.tex

Vertices are comma-separated integers; cubes are ``lo:hi`` corner pairs.
Exit status: 0 on success, 2 on bad input, 1 when ``--fail-on-obstruction``
is set and a disconnected path space was found.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .analysis import dump_links, theorem_verdicts
from .collapse import CollapseMode, greedy_collapse, try_collapse
from .cubes import Cube, CubicalComplex, dumps_complex, loads_complex
from .errors import DicollapseError
from .pv import PVProgram, builtin, state_space_complex
from .reachability import reachability_report
from .tikz import export_tikz


def parse_vertex(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex {text!r}; expected e.g. 0,0,0") from None


def parse_cube(text: str) -> Cube:
    try:
        lo, hi = text.split(":")
        return Cube.between(parse_vertex(lo), parse_vertex(hi))
    except (ValueError, argparse.ArgumentTypeError, DicollapseError):
        raise argparse.ArgumentTypeError(
            f"bad cube {text!r}; expected lo:hi corners such as 1,2:2,3"
        ) from None


def parse_vertex_list(text: str) -> list[tuple[int, ...]]:
    return [parse_vertex(part) for part in text.split(";") if part.strip()]


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _dump_json(obj) -> str:
    """Indented JSON with flat integer lists kept on one line."""
    text = json.dumps(obj, indent=2)
    text = _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def _write(path, text: str):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path) -> CubicalComplex:
    return loads_complex(Path(path).read_text())


def cmd_generate(args) -> int:
    if args.builtin:
        K = builtin(args.builtin)
    else:
        K = state_space_complex(PVProgram.from_json(Path(args.pv).read_text()))
    _write(args.out, dumps_complex(K))
    return 0


def cmd_analyze(args) -> int:
    K = _load(args.input)
    if args.reach is not None:
        report = reachability_report(K, args.reach, args.final)
        _write(args.json, _dump_json(report.to_dict()))
        return 0
    if args.start is None:
        raise DicollapseError("analyze needs --start or --reach")
    report = theorem_verdicts(K, args.start, strict=not args.non_strict, budget=args.budget)
    if args.dump_links:
        sys.stdout.write(dump_links(report))
    _write(args.json, _dump_json(report.to_dict(include_links=args.dump_links)))
    if args.fail_on_obstruction and report.realized_disconnections:
        return 1
    return 0


def cmd_collapse(args) -> int:
    K = _load(args.input)
    preserve = [v for group in args.preserve for v in group]
    steps, K2 = greedy_collapse(
        K, args.start, CollapseMode.parse(args.mode), preserve,
        max_tau_dim=0 if args.vertex_pairs else None,
        budget=args.budget,
    )
    _write(args.out, dumps_complex(K2))
    if args.log:
        Path(args.log).write_text(_dump_json([s.to_dict() for s in steps]))
    sys.stderr.write(f"{len(steps)} collapse steps; final complex {K2.counts()} cubes by dimension\n")
    return 0


def cmd_check_pair(args) -> int:
    K = _load(args.input)
    step, _ = try_collapse(K, args.start, args.tau, args.sigma, CollapseMode.parse(args.mode),
                           budget=args.budget)
    _write(args.json, _dump_json(step.to_dict()))
    return 0


def cmd_export(args) -> int:
    K = _load(args.input)
    if args.tikz is None and args.json is None:
        raise DicollapseError("export needs --tikz and/or --json")
    if args.tikz is not None:
        _write(args.tikz, export_tikz(K))
    if args.json is not None:
        _write(args.json, dumps_complex(K))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dicollapse", description="Past links and directed collapse of cubical complexes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a complex from a PV program or a builtin")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME")
    src.add_argument("--pv", metavar="PROGRAM.json")
    g.add_argument("--out", metavar="K.json")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="past-link verdicts or reachability")
    a.add_argument("--in", dest="input", required=True, metavar="K.json")
    a.add_argument("--start", type=parse_vertex)
    a.add_argument("--reach", type=parse_vertex, metavar="W")
    a.add_argument("--final", type=parse_vertex, metavar="F")
    a.add_argument("--json", metavar="OUT.json")
    a.add_argument("--dump-links", action="store_true")
    a.add_argument("--non-strict", action="store_true", help="allow a non-minimal start vertex")
    a.add_argument("--fail-on-obstruction", action="store_true")
    a.add_argument("--budget", type=int, default=10**6)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("collapse", help="greedy directed collapse")
    c.add_argument("--mode", choices=["0", "homotopy"], default="homotopy")
    c.add_argument("--start", type=parse_vertex, required=True)
    c.add_argument("--preserve", type=parse_vertex_list, action="append", default=[],
                   metavar="V[;V...]")
    c.add_argument("--in", dest="input", required=True, metavar="K.json")
    c.add_argument("--out", metavar="K2.json")
    c.add_argument("--log", metavar="STEPS.json")
    c.add_argument("--vertex-pairs", action="store_true", help="only collapse vertices into cubes")
    c.add_argument("--budget", type=int, default=10**6)
    c.set_defaults(func=cmd_collapse)

    k = sub.add_parser("check-pair", help="test one collapsing pair")
    k.add_argument("--in", dest="input", required=True, metavar="K.json")
    k.add_argument("--start", type=parse_vertex, required=True)
    k.add_argument("--tau", type=parse_cube, required=True)
    k.add_argument("--sigma", type=parse_cube, required=True)
    k.add_argument("--mode", choices=["0", "homotopy"], default="homotopy")
    k.add_argument("--json", metavar="OUT.json")
    k.add_argument("--budget", type=int, default=10**6)
    k.set_defaults(func=cmd_check_pair)

    e = sub.add_parser("export", help="write a TikZ picture or canonical JSON")
    e.add_argument("--in", dest="input", required=True, metavar="K.json")
    e.add_argument("--tikz", metavar="OUT.tex")
    e.add_argument("--json", metavar="OUT.json")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DicollapseError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"dicollapse {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
