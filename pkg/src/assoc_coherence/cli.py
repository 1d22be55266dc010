"""Command-line interface.

Exit codes: 0 success, 1 domain error (parse, inapplicable move, leaf-count
mismatch, cap), 2 verification found violations, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import fgroup, verify
from .expr import CoherenceError, default_cap, enumerate_exprs, left_comb, metrics, parse, parse_address, render
from .fgroup import TreePair, parse_pair
from .graph import rotation_dot
from .moves import rotate_at
from .normalize import apply_word, canonical_iso, format_word, free_reduce, normalize_word, parse_word

EXIT_OK, EXIT_DOMAIN, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # Shared by the top-level parser and each subcommand so the flags may
    # appear on either side of the command name.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--max-n", type=int, default=d(None),
                   help="leaf-count cap (enum, graph) or suite bound (verify)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized suites")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for verification")
    p.add_argument("--no-timing", action="store_true", default=d(False),
                   help="omit elapsed times so reports are byte-reproducible")
    return p


def _element(text: str) -> TreePair:
    """A word (``"a0 A1"``) or an explicit pair (``"D | R"``)."""
    if "|" in text:
        return fgroup.reduce_pair(parse_pair(text))
    return fgroup.from_word(parse_word(text))


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(suppress=True)
    parser = _Parser(prog="assoc-coherence", parents=[_global_options(suppress=False)],
                     description="Associativity coherence and Thompson's group F.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("norm", parents=[common], help="normalizing word to the left comb")
    p.add_argument("expr")

    p = sub.add_parser("iso", parents=[common], help="canonical word between two expressions")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("apply", parents=[common], help="apply a word to an expression")
    p.add_argument("word")
    p.add_argument("expr")

    p = sub.add_parser("enum", parents=[common], help="list all expressions on n leaves")
    p.add_argument("n", type=int)

    p = sub.add_parser("graph", parents=[common], help="rotation graph on n leaves as DOT")
    p.add_argument("n", type=int)
    p.add_argument("--full", action="store_true", help="include rotations off the left spine")

    p = sub.add_parser("rotate", parents=[common], help="left rotation at an address (e.g. R, LR, -)")
    p.add_argument("expr")
    p.add_argument("address")

    p = sub.add_parser("express", parents=[common],
                       help="write a rotation at any address with a<i> moves only")
    p.add_argument("expr")
    p.add_argument("address")

    p = sub.add_parser("f", parents=[common], help="Thompson's group F arithmetic")
    fsub = p.add_subparsers(dest="op", required=True, parser_class=_Parser)
    q = fsub.add_parser("mul", parents=[common], help="product, first factor applied first")
    q.add_argument("elements", nargs="+")
    for name, helptext in (("inv", "inverse"), ("canon", "canonical word"), ("pair", "reduced tree pair")):
        q = fsub.add_parser(name, parents=[common], help=helptext)
        q.add_argument("element")
    q = fsub.add_parser("eq", parents=[common], help="equality in F")
    q.add_argument("left")
    q.add_argument("right")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*verify.SUITES, "all"])
    return parser


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def _element_payload(p: TreePair) -> tuple[dict, str]:
    word = format_word(fgroup.canonical_word(p))
    return {"word": word, "pair": str(p)}, f"{word}\n{p}"


def run(args) -> int:
    cap = args.max_n if args.max_n is not None else default_cap()
    cmd = args.command
    if cmd == "norm":
        e = parse(args.expr)
        word = format_word(normalize_word(e))
        target = render(left_comb(e.size))
        m = metrics(e)
        _emit(args, {"input": render(e), "word": word, "target": target,
                     "level": m.level, "weight": m.weight}, f"{word}\n{target}")
    elif cmd == "iso":
        e, f = parse(args.source), parse(args.target)
        raw = canonical_iso(e, f)
        word = format_word(free_reduce(raw))
        _emit(args, {"source": render(e), "target": render(f), "word": word, "unreduced": format_word(raw)}, word)
    elif cmd == "apply":
        result = render(apply_word(parse_word(args.word), parse(args.expr)))
        _emit(args, {"result": result}, result)
    elif cmd == "enum":
        exprs = [render(e) for e in enumerate_exprs(args.n, cap=cap)]
        _emit(args, {"n": args.n, "count": len(exprs), "expressions": exprs}, "\n".join(exprs))
    elif cmd == "graph":
        sys.stdout.write(rotation_dot(args.n, args.full, cap=cap))
    elif cmd == "rotate":
        result = render(rotate_at(parse(args.expr), parse_address(args.address)))
        _emit(args, {"result": result}, result)
    elif cmd == "express":
        e = parse(args.expr)
        target = rotate_at(e, parse_address(args.address))
        word = format_word(free_reduce(canonical_iso(e, target)))
        _emit(args, {"source": render(e), "target": render(target), "word": word}, f"{word}\n{render(target)}")
    elif cmd == "f":
        return _run_f(args)
    elif cmd == "verify":
        return _run_verify(args)
    return EXIT_OK


def _run_f(args) -> int:
    if args.op == "mul":
        p = fgroup.identity()
        for text in args.elements:
            p = fgroup.multiply(p, _element(text))
        _emit(args, *_element_payload(p))
    elif args.op == "inv":
        _emit(args, *_element_payload(fgroup.invert(_element(args.element))))
    elif args.op == "canon":
        word = format_word(fgroup.canonical_word(_element(args.element)))
        _emit(args, {"word": word}, word)
    elif args.op == "pair":
        p = _element(args.element)
        _emit(args, {"pair": str(p)}, str(p))
    elif args.op == "eq":
        same = fgroup.equal(_element(args.left), _element(args.right))
        _emit(args, {"equal": same}, "true" if same else "false")
    return EXIT_OK


def _run_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.max_n is not None and args.suite == "all":
        raise UsageError("--max-n cannot be combined with 'all'")
    reports = [verify.run_suite(name, n_max=args.max_n, seed=args.seed, jobs=args.jobs, cap=default_cap())
               for name in names]
    timing = not args.no_timing
    if args.json:
        payload = [r.to_dict(timing) for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
    else:
        print("\n".join(r.to_text(timing) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CoherenceError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
