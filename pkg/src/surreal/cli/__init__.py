"""Command-line calculator and law-suite runner.

    surreal '{0 | 1}'                 evaluate expressions given as arguments
    surreal --file corpus.txt         evaluate one expression per line
    surreal --suite all --json        run law suites

With no expressions, no file and no suite, lines are read from standard
input (with a prompt when it is a terminal).  In batch input, blank
lines and lines starting with ``#`` are skipped, and a line may start
with ``@signs``, ``@value``, ``@cnf`` or ``@auto`` to pick its render mode.
"""
import argparse
import json
import sys

from .. import ordinal as O
from ..errors import BudgetExceeded, SurrealError
from .evaluate import EvalError, evaluate
from .laws import SUITES, run_all, run_suite
from .render import MODES, render
from .syntax import ParseError, parse

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_MATH, EXIT_BUDGET = 0, 1, 2, 3, 4


def exit_code(err):
    if isinstance(err, (ParseError, EvalError)):
        return EXIT_PARSE
    if isinstance(err, BudgetExceeded):
        return EXIT_BUDGET
    return EXIT_MATH


def run_line(line, mode="auto", budget=None):
    """``(output, code)`` for one input line; ``output`` is None for skipped lines."""
    text = line.strip()
    if not text or text.startswith("#"):
        return None, EXIT_OK
    if text.startswith("@"):
        head, _, rest = text.partition(" ")
        if head[1:] not in MODES:
            return f"{text} ! ParseError: unknown render mode {head[1:]!r}", EXIT_PARSE
        mode, text = head[1:], rest.strip()
    try:
        result = render(evaluate(parse(text), budget), mode)
    except (ParseError, EvalError, SurrealError) as err:
        return f"{text} ! {type(err).__name__}: {err}", exit_code(err)
    return f"{text} = {result}", EXIT_OK


def run_lines(lines, out, mode="auto", budget=None):
    code = EXIT_OK
    for line in lines:
        text, c = run_line(line, mode, budget)
        if text is not None:
            print(text, file=out)
        if c and not code:
            code = c
    return code


def _suite_names(name):
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise KeyError(name)
    return [name]


def run_suites(name, seed, size, as_json, out):
    reports = run_all(seed, size) if name == "all" else [run_suite(name, seed, size)]
    if as_json:
        json.dump([r.as_dict() for r in reports], out, indent=2)
        out.write("\n")
    else:
        width = max(len(r.name) for r in reports)
        for r in reports:
            verdict = "pass" if r.passed else "FAIL"
            print(f"{verdict}  {r.name:<{width}}  samples={r.samples:<5} {r.statement}", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def build_parser():
    p = argparse.ArgumentParser(prog="surreal", description="Exact surreal-number calculator.")
    p.add_argument("expr", nargs="*", help="expressions to evaluate")
    p.add_argument("--render", choices=MODES, default="auto", help="output form (default: auto)")
    p.add_argument("--budget", help="longest allowed result length, as an ordinal (default: w^2)")
    p.add_argument("--file", help="evaluate one expression per line of this file")
    p.add_argument("--suite", help="run a law suite, or 'all'; 'list' shows their names")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized law samples")
    p.add_argument("--samples", type=int, default=100, help="random samples per suite")
    p.add_argument("--json", action="store_true", help="machine-readable suite report")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    budget = None
    if args.budget is not None:
        try:
            budget = O.parse_ordinal(args.budget)
        except ValueError as err:
            print(f"bad --budget: {err}", file=sys.stderr)
            return EXIT_PARSE
    if args.suite:
        if args.suite == "list":
            for name, (statement, _) in SUITES.items():
                print(f"{name}  {statement}", file=out)
            return EXIT_OK
        try:
            _suite_names(args.suite)
        except KeyError:
            print(f"unknown suite {args.suite!r}; try --suite list", file=sys.stderr)
            return EXIT_PARSE
        return run_suites(args.suite, args.seed, args.samples, args.json, out)
    if args.expr:
        return run_lines(args.expr, out, args.render, budget)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return run_lines(fh, out, args.render, budget)
    return _repl(out, args.render, budget)


def _repl(out, mode, budget):
    if not sys.stdin.isatty():
        return run_lines(sys.stdin, out, mode, budget)
    code = EXIT_OK
    while True:
        try:
            line = input("surreal> ")
        except EOFError:
            print(file=out)
            return code
        text, c = run_line(line, mode, budget)
        if text is not None:
            print(text, file=out)
        code = c or code
