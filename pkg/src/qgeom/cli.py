"""Command-line front end: ``qgeom <quantity> ...`` and ``qgeom figure <id>``.

Parameter values accept ``pi`` arithmetic and three forms:

    --theta 0.7            a pinned value
    --theta 0:pi           a range sampled with --grid points
    --theta 0:pi:41        a range with an explicit count
    --n 2,3,4,5            an explicit list

Exit status: 0 on success, 2 on domain errors, 1 on I/O errors.
"""

from __future__ import annotations

import argparse
import ast
import math
import operator
import sys

import numpy as np

from . import __version__
from .errors import DomainError
from .sweep import FIGURES, QUANTITIES, SweepConfig, emit, reproduce_figure, run_sweep, to_csv, to_json, to_svg

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv, ast.Pow: operator.pow}


def parse_number(text: str) -> float:
    """Evaluate a number such as ``0.5``, ``pi/2`` or ``3*pi/4``."""
    text = text.strip().replace("π", "pi")

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(text)

    try:
        return ev(ast.parse(text, mode="eval").body)
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse number {text!r}") from None


def parse_values(text: str, default_count: int):
    """Return a float for a pinned value or a list for a swept one."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise DomainError(f"range must be start:stop[:count], got {text!r}")
        count = int(parts[2]) if len(parts) == 3 else default_count
        if count < 2:
            raise DomainError(f"grid count must be >= 2, got {count}")
        return list(np.linspace(parse_number(parts[0]), parse_number(parts[1]), count))
    if "," in text:
        return [parse_number(p) for p in text.split(",")]
    return parse_number(text)


def _build_parser():
    parser = argparse.ArgumentParser(prog="qgeom", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"qgeom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{quantity|figure}")
    for name, q in QUANTITIES.items():
        p = sub.add_parser(name, help=f"sweep {name} over ({', '.join(q.params)})")
        for opt in ("n", "J", "theta", "phi", "chi", "E"):
            p.add_argument(f"--{opt}", dest=opt, metavar="VALUE")
        p.add_argument("--grid", type=int, default=101, help="points per range without explicit count (default 101)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "svg"), default="csv")
        p.add_argument("--out", help="output file (default: stdout)")
    fig = sub.add_parser("figure", help="write the dataset of a figure preset")
    fig.add_argument("id", choices=list(FIGURES))
    fig.add_argument("--out-dir", default=".")
    return parser


def _config_from_args(args) -> SweepConfig:
    q = QUANTITIES[args.command]
    grids, fixed = {}, {}
    for opt in ("n", "J", "theta", "phi", "chi", "E"):
        raw = getattr(args, opt)
        if raw is None:
            continue
        if opt not in q.params:
            raise DomainError(f"{args.command} does not take --{opt}")
        val = parse_values(raw, args.grid)
        (grids if isinstance(val, list) else fixed)[opt] = val
    return SweepConfig(args.command, grids, fixed, args.out, args.fmt)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "figure":
            for path in reproduce_figure(args.id, args.out_dir):
                print(path)
            return 0
        config = _config_from_args(args)
        table = run_sweep(config)
        if config.output:
            emit(table, config.fmt, config.output)
        else:
            sys.stdout.write({"csv": to_csv, "json": to_json, "svg": to_svg}[config.fmt](table))
    except DomainError as exc:
        print(f"qgeom: domain error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qgeom: I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
