"""Command line interface: eval, repl, bench and selftest subcommands.

Exit codes: 0 success, 1 evaluation/parse failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .bench import DEFAULT_N_VALUES, DEFAULT_REPS, DEFAULT_SEED, bench_pow
from .errors import ExprError
from .evaluator import evaluate_source, render_error, render_json, render_text
from .expression import FUNCTION_ARITY
from .selftest import run_all

HELP_TEXT = """Enter one expression per line. Commands:
  :help   show this message
  :quit   leave the repl

Syntax: numbers, units i j k (2i means 2*i), + - * parentheses,
^ with a literal integer exponent (non-associative).
Functions: """ + ", ".join(sorted(FUNCTION_ARITY)) + "."


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coquat",
        description="Split-quaternion calculator: algebra, polar forms, "
                    "matrix representations, closed-form powers and exponentials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eval_p = sub.add_parser("eval", help="evaluate one expression and print the result")
    eval_p.add_argument("expression")
    eval_p.add_argument("--json", action="store_true", help="structured JSON output")

    sub.add_parser("repl", help="interactive line-at-a-time loop")

    bench_p = sub.add_parser("bench", help="closed-form vs naive matrix power timings (CSV)")
    bench_p.add_argument("--n", default=",".join(str(n) for n in DEFAULT_N_VALUES),
                         help="comma-separated exponents (default %(default)s)")
    bench_p.add_argument("--reps", type=int, default=DEFAULT_REPS,
                         help="repetitions per exponent (default %(default)s)")
    bench_p.add_argument("--seed", type=int, default=None,
                         help="RNG seed (default: COQUAT_SEED or 42)")
    bench_p.add_argument("--backend", choices=("auto", "fast", "pure"), default="auto",
                         help="kernel backend to benchmark (default auto)")

    sub.add_parser("selftest", help="run the acceptance suite, print pass/fail per criterion")
    return parser


def _cmd_eval(args) -> int:
    src = args.expression
    try:
        value = evaluate_source(src)
    except ExprError as err:
        print(render_error(src, err), file=sys.stderr)
        return 1
    print(render_json(value) if args.json else render_text(value))
    return 0


def _cmd_repl() -> int:
    try:
        import readline  # noqa: F401  (line editing when available)
    except ImportError:
        pass
    print("coquat repl - :help for syntax, :quit to leave")
    while True:
        try:
            line = input("coquat> ")
        except EOFError:
            print()
            return 0
        except KeyboardInterrupt:
            print()
            continue
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return 0
        if line == ":help":
            print(HELP_TEXT)
            continue
        if line.startswith(":"):
            print(f"unknown command {line!r}; try :help")
            continue
        try:
            print(render_text(evaluate_source(line)))
        except ExprError as err:
            print(render_error(line, err))
    return 0


def _cmd_bench(args) -> int:
    try:
        n_values = [int(part) for part in args.n.split(",") if part.strip()]
    except ValueError:
        print("error: --n expects comma-separated integers", file=sys.stderr)
        return 2
    if not n_values or any(n < 1 for n in n_values):
        print("error: --n values must be positive integers", file=sys.stderr)
        return 2
    if args.reps < 1:
        print("error: --reps must be >= 1", file=sys.stderr)
        return 2
    seed = args.seed
    if seed is None:
        env = os.environ.get("COQUAT_SEED")
        try:
            seed = int(env) if env is not None else DEFAULT_SEED
        except ValueError:
            print(f"error: COQUAT_SEED must be an integer, got {env!r}", file=sys.stderr)
            return 2
    from . import _backend

    if args.backend == "pure":
        _backend.use_pure_python()
    elif args.backend == "fast":
        _backend.use_default()
        if _backend.backend_name() != "cython":
            print("error: compiled backend requested but not built", file=sys.stderr)
            return 2
    try:
        sys.stdout.write(bench_pow(n_values, reps=args.reps, seed=seed))
    finally:
        _backend.use_default()
    return 0


def _shield_expression(argv: list[str]) -> list[str]:
    # Expressions may start with '-' (e.g. "-j^2"); keep argparse from
    # reading them as options by moving flags forward and adding '--'.
    if not argv or argv[0] != "eval" or "--" in argv:
        return argv
    flags = [a for a in argv[1:] if a in ("--json", "-h", "--help")]
    rest = [a for a in argv[1:] if a not in ("--json", "-h", "--help")]
    return ["eval", *flags, "--", *rest]


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = _build_parser().parse_args(_shield_expression(argv))
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "repl":
        return _cmd_repl()
    if args.command == "bench":
        return _cmd_bench(args)
    return 0 if run_all() else 1


if __name__ == "__main__":
    sys.exit(main())
