"""Command-line front end.

Exit codes: 0 success / equivalence holds, 1 equivalence fails or a
flattening check fails, 2 usage or parse error, 3 no stable models,
4 enumeration cap exceeded, 5 flattening precondition violated.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import equivalence, flattening
from .se import SE_CAP, enumerate_se_models
from .semantics import DEFAULT_CAP, CapExceededError, stable_models
from .simplify import classify_rule, semantic_validity, simplify_and_solve
from .syntax import Literal, ParseError, Program, literal_set, parse_program
from .weights import NoStableModelsError

EXIT_FAILS = 1
EXIT_PARSE = 2
EXIT_NO_MODELS = 3
EXIT_CAP = 4
EXIT_FLATTEN = 5

MODE_ALIASES = {
    "semi": "semi-strong",
    "p": "p-strong",
    "w": "w-strong",
    "ordinary-w": "ordinary-w",
    "ordinary-p": "ordinary-p",
}


class UsageError(Exception):
    pass


def _read(path: str) -> Program:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}")
    return parse_program(text)


def _literals(spec: Optional[str]):
    if spec is None:
        return None
    spec = spec.strip().strip("{}")
    try:
        return literal_set(s for s in spec.split(",") if s.strip())
    except ValueError as exc:
        raise UsageError(f"bad literal list {spec!r}: {exc}")


def cmd_solve(args) -> int:
    program = _read(args.file)
    universe = _literals(args.universe)
    if args.marginal is not None:
        report = stable_models(program, universe, args.cap)
        if not len(report):
            raise NoStableModelsError("no stable models: marginal undefined")
        lit = Literal.parse(args.marginal)
        prob = sum(e.probability for e in report if lit in e.model)
        print(f"P({lit}) = {prob:.6f}")
        return 0
    if args.simplify:
        report, log = simplify_and_solve(program, universe, cap=args.cap)
    else:
        report, log = stable_models(program, universe, args.cap), None
    if args.map:
        if not len(report):
            raise NoStableModelsError("no stable models: MAP undefined")
        best = report.entries[0].degree
        report = type(report)(tuple(e for e in report if e.degree.isclose(best)))
    if args.format == "json":
        doc = {"models": json.loads(report.to_json())}
        if log is not None:
            doc["removed"] = [str(r) for r in log.removed]
        print(json.dumps(doc, indent=2))
    else:
        if log is not None and log.removed:
            sys.stdout.write(log.to_text())
        sys.stdout.write(report.to_table())
    return 0


def cmd_se_models(args) -> int:
    program = _read(args.file)
    universe = _literals(args.universe)
    models = enumerate_se_models(program, universe, args.cap)
    sys.stdout.write(models.to_text())
    return 0


def cmd_check_eq(args) -> int:
    left = _read(args.file1)
    right = _read(args.file2)
    mode = MODE_ALIASES[args.mode]
    verdict = equivalence.check(left, right, mode)
    if args.format == "json":
        print(verdict.to_json())
    else:
        sys.stdout.write(verdict.to_text())
    return 0 if verdict.holds else EXIT_FAILS


def cmd_classify(args) -> int:
    program = _read(args.file)
    for wr in program:
        rc = classify_rule(wr)
        line = f"{wr}  % {rc.label()}"
        if args.semantic:
            line += f" (semantic: {semantic_validity(wr)})"
        print(line)
    return 0


def cmd_flatten(args) -> int:
    program = _read(args.file)
    universe = _literals(args.universe)
    fresh = [f.strip() for f in args.fresh.split(",")] if args.fresh else []
    state = flattening.initial_state(program, universe)
    print(state.to_text(), end="")
    sys.stdout.write(state.solve(args.cap).to_table())
    all_ok = True
    for i, target_spec in enumerate(args.target or []):
        target = _literals(target_spec)
        name = fresh[i] if i < len(fresh) else None
        nxt = flattening.extend(state, target, name, args.cap)
        report = flattening.check_prop3(state, nxt, target, args.cap)
        print()
        print(nxt.to_text(), end="")
        sys.stdout.write(nxt.solve(args.cap).to_table())
        checks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in report.as_dict().items())
        print(f"% checks: {checks}")
        for failure in report.failures:
            print(f"% failure: {failure}")
        all_ok = all_ok and report.ok
        state = nxt
    return 0 if all_ok else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpmln-equiv",
        description="Stable models, SE-models and strong equivalence for ground LP^MLN programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="stable models with weight and probability degrees")
    p.add_argument("file", help="program file, or - for stdin")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--map", action="store_true", help="only maximal-degree models")
    group.add_argument("--marginal", metavar="LIT", help="probability of a literal")
    group.add_argument("--simplify", action="store_true", help="drop (semi-)valid rules first")
    p.add_argument("--universe", help="comma-separated literals to enumerate over")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("se-models", help="list SE-models with weight degrees")
    p.add_argument("file")
    p.add_argument("--universe")
    p.add_argument("--cap", type=int, default=SE_CAP)
    p.set_defaults(func=cmd_se_models)

    p = sub.add_parser("check-eq", help="decide an equivalence between two programs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--mode", choices=tuple(MODE_ALIASES), default="semi")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_check_eq)

    p = sub.add_parser("classify", help="TAUT/CONTRA/CONSTR flags and validity per rule")
    p.add_argument("file")
    p.add_argument("--semantic", action="store_true", help="also decide validity via SE-models")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("flatten", help="build a flattening extension chain")
    p.add_argument("file")
    p.add_argument("--universe", required=True)
    p.add_argument("--target", action="append", help="probabilistic model to extend with; repeatable")
    p.add_argument("--fresh", help="comma-separated names for the fresh atoms")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_flatten)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoStableModelsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_MODELS
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except flattening.FlatteningError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLATTEN


if __name__ == "__main__":
    sys.exit(main())
