"""Command-line entry point: ``catalan-bijections <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from itertools import islice
from typing import Optional, Sequence

from . import terms
from .beta import beta, beta_inv
from .classical import _arcs_to_planar, _tiling_to_binary, to_recursive, transport
from .codec import TERM, LiteralSyntaxError, format_literal, parse_literal
from .model import CatalanError, Family, InvariantError
from .render import render
from .verify import CatalanOverflow, catalan, format_table, run_suite

FAMILIES = [f.value for f in Family]


class UsageError(Exception):
    """Bad combination of otherwise well-formed arguments (exit 2)."""


def _enumerate(kind: str, n: int):
    if kind == TERM:
        yield from terms.enum_terms(n)
        return
    fam = Family(kind)
    # enumerated shapes are valid by construction, so skip re-validation
    if fam is Family.B:
        yield from map(_tiling_to_binary, terms.enumerate_family(Family.S, n))
    elif fam is Family.P:
        yield from map(_arcs_to_planar, terms.enumerate_family(Family.A, n))
    else:
        yield from terms.enumerate_family(fam, n)


def cmd_count(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    out.write(f"{catalan(args.n)}\n")
    return 0


def cmd_enum(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.n > 16:
        raise UsageError("--n above 16 would print more than 35 million lines")
    items = _enumerate(args.family, args.n)
    if args.limit is not None:
        items = islice(items, args.limit)
    for x in items:
        out.write(format_literal(args.family, x) + "\n")
    return 0


def cmd_map(args, out) -> int:
    shape = parse_literal(args.source, args.input)
    if args.via == "beta":
        pair = (args.source, args.target)
        if pair == ("T", "S"):
            image = beta(shape)
        elif pair == ("S", "T"):
            image = beta_inv(shape)
        else:
            raise UsageError("beta maps only between T and S")
    else:
        image = transport(args.source, args.target, shape)
    out.write(format_literal(args.target, image) + "\n")
    return 0


def cmd_term(args, out) -> int:
    fam, shape = to_recursive(args.family, parse_literal(args.family, args.input))
    out.write(format_literal(TERM, terms.term_of(fam, shape)) + "\n")
    return 0


def cmd_render(args, out) -> int:
    text = render(args.family, parse_literal(args.family, args.input), args.mode)
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_verify(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    results = run_suite(args.max_n, args.oracle_n, jobs=args.jobs)
    out.write(format_table(results) + "\n\n")
    for r in results:
        out.write(r.line() + "\n")
    if args.figures:
        from .figures import write_figures  # matplotlib is only needed here

        for path in write_figures(args.figures):
            sys.stderr.write(f"wrote {path}\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-bijections",
        description="Count, enumerate, map and verify Catalan families (T, S, A, B, P).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the Catalan number c_N")
    p.add_argument("--family", required=True, choices=FAMILIES + [TERM])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("enum", help="list every size-N shape, one literal per line")
    p.add_argument("--family", required=True, choices=FAMILIES + [TERM])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(run=cmd_enum)

    p = sub.add_parser("map", help="send a shape to another family")
    p.add_argument("--via", required=True, choices=["alpha", "beta"])
    p.add_argument("--from", dest="source", required=True, choices=FAMILIES)
    p.add_argument("--to", dest="target", required=True, choices=FAMILIES)
    p.add_argument("--input", required=True)
    p.set_defaults(run=cmd_map)

    p = sub.add_parser("term", help="print the construction term of a shape")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--input", required=True)
    p.set_defaults(run=cmd_term)

    p = sub.add_parser("render", help="draw a shape as ASCII art or SVG")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--input", required=True)
    p.add_argument("--mode", required=True, choices=["ascii", "svg"])
    p.add_argument("--out")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("verify", help="run the exhaustive property suite")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle-n", type=int, help="brute-force oracle bound (default min(max-n, 8))")
    p.add_argument("--figures", metavar="DIR", help="also write comparison figures (PNG) into DIR")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return 2
    except CatalanOverflow as exc:
        sys.stderr.write(f"overflow: {exc}\n")
        return 1
    except LiteralSyntaxError as exc:
        sys.stderr.write(f"syntax error: {exc}\n")
        return 1
    except InvariantError as exc:
        sys.stderr.write(f"invalid: {exc}\n")
        return 1
    except CatalanError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
