"""Ordinary, semi-strong, p-strong and w-strong equivalence of LP^MLN programs.

The strong notions are decided through SE-models. ``oracle_semi_strong``
decides semi-strong equivalence the slow way, by solving both programs
under a family of context programs, and is kept independent of the SE route.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from .se import SE_CAP, SEInterpretation, enumerate_se_models
from .semantics import CapExceededError, Compiled, DEFAULT_CAP, stable_models
from .syntax import (
    Literal,
    LiteralSet,
    Program,
    Rule,
    Weight,
    WeightedRule,
    format_set,
    print_program,
    program_literals,
    set_sort_key,
)
from .weights import TOLERANCE, SymbolicWeight

MODES = ("ordinary-w", "ordinary-p", "semi-strong", "p-strong", "w-strong")
ORACLE_CAP = 6

Witness = Union[SEInterpretation, LiteralSet, Program, Tuple[SEInterpretation, SEInterpretation], None]


@dataclass(frozen=True)
class EquivalenceVerdict:
    mode: str
    holds: bool
    witness: Witness = None
    scaling: Optional[SymbolicWeight] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def witness_text(self) -> Optional[str]:
        w = self.witness
        if w is None:
            return None
        if isinstance(w, Program):
            return print_program(w).strip() or "(empty program)"
        if isinstance(w, tuple):
            return "; ".join(str(se) for se in w)
        if isinstance(w, frozenset):
            return format_set(w)
        return str(w)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "holds": self.holds,
            "scaling": str(self.scaling) if self.scaling is not None else None,
            "witness": self.witness_text(),
            "detail": self.detail,
        }

    def to_text(self) -> str:
        lines = [f"mode: {self.mode}", f"holds: {'true' if self.holds else 'false'}"]
        if self.scaling is not None:
            lines.append(f"scaling: {self.scaling}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness_text()}")
        if self.detail:
            lines.append(f"detail: {self.detail}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def joint_universe(*programs: Program) -> LiteralSet:
    out: set = set()
    for p in programs:
        out |= program_literals(p)
    return frozenset(out)


# ---------------------------------------------------------------------------
# ordinary equivalence


def _solve_both(l: Program, m: Program, cap: int):
    universe = joint_universe(l, m)
    rl = stable_models(l, universe, cap)
    rm = stable_models(m, universe, cap)
    return rl, rm


def _model_mismatch(rl, rm) -> Optional[LiteralSet]:
    a = set(rl.models)
    b = set(rm.models)
    diff = a ^ b
    if diff:
        return min(diff, key=set_sort_key)
    return None


def ordinary_equivalent_w(l: Program, m: Program, cap: int = DEFAULT_CAP) -> EquivalenceVerdict:
    rl, rm = _solve_both(l, m, cap)
    missing = _model_mismatch(rl, rm)
    if missing is not None:
        return EquivalenceVerdict("ordinary-w", False, missing, detail="stable models differ")
    for e in sorted(rl, key=lambda e: set_sort_key(e.model)):
        other = rm.entry(e.model).degree
        if not e.degree.isclose(other):
            return EquivalenceVerdict(
                "ordinary-w", False, e.model, detail=f"weight degrees {e.degree} vs {other}"
            )
    return EquivalenceVerdict("ordinary-w", True)


def ordinary_equivalent_p(l: Program, m: Program, cap: int = DEFAULT_CAP) -> EquivalenceVerdict:
    rl, rm = _solve_both(l, m, cap)
    missing = _model_mismatch(rl, rm)
    if missing is not None:
        return EquivalenceVerdict("ordinary-p", False, missing, detail="stable models differ")
    for e in sorted(rl, key=lambda e: set_sort_key(e.model)):
        other = rm.probability(e.model)
        if abs(e.probability - other) > TOLERANCE:
            return EquivalenceVerdict(
                "ordinary-p",
                False,
                e.model,
                detail=f"probabilities {e.probability:.6f} vs {other:.6f}",
            )
    return EquivalenceVerdict("ordinary-p", True)


# ---------------------------------------------------------------------------
# strong equivalence via SE-models


def semi_strong_equivalent(l: Program, m: Program, cap: int = SE_CAP) -> EquivalenceVerdict:
    """Same SE-models over the joint signature (weights ignored)."""
    universe = joint_universe(l, m)
    sl = enumerate_se_models(l, universe, cap).as_set()
    sm = enumerate_se_models(m, universe, cap).as_set()
    diff = sl ^ sm
    if diff:
        witness = min(diff, key=SEInterpretation.sort_key)
        side = "first" if witness in sl else "second"
        return EquivalenceVerdict(
            "semi-strong", False, witness, detail=f"SE-model of the {side} program only"
        )
    return EquivalenceVerdict("semi-strong", True)


def p_strong_equivalent(l: Program, m: Program, cap: int = SE_CAP) -> EquivalenceVerdict:
    """Same SE-models, and ``W(l,(X,Y)) / W(m,(X,Y))`` is one constant ``exp(k*alpha + c)``."""
    semi = semi_strong_equivalent(l, m, cap)
    if not semi.holds:
        return EquivalenceVerdict("p-strong", False, semi.witness, detail=semi.detail)
    universe = joint_universe(l, m)
    sl = enumerate_se_models(l, universe, cap)
    sm = enumerate_se_models(m, universe, cap)
    first = None
    scaling = None
    for se in sl:
        ratio = sl.weight(se) / sm.weight(se)
        if scaling is None:
            first, scaling = se, ratio
        elif not ratio.isclose(scaling):
            return EquivalenceVerdict(
                "p-strong",
                False,
                (first, se),
                detail=f"weight ratios {scaling} and {ratio} differ",
            )
    return EquivalenceVerdict("p-strong", True, scaling=scaling)


def w_strong_equivalent(l: Program, m: Program, cap: int = SE_CAP) -> EquivalenceVerdict:
    p = p_strong_equivalent(l, m, cap)
    if not p.holds:
        return EquivalenceVerdict("w-strong", False, p.witness, detail=p.detail)
    if not p.scaling.is_unit():
        # every SE-model carries the same non-unit ratio; (empty, empty) is the smallest
        witness = SEInterpretation(frozenset(), frozenset())
        return EquivalenceVerdict(
            "w-strong", False, witness, scaling=p.scaling, detail=f"weight ratio {p.scaling} is not 1"
        )
    return EquivalenceVerdict("w-strong", True, scaling=p.scaling)


def check(l: Program, m: Program, mode: str) -> EquivalenceVerdict:
    deciders = {
        "ordinary-w": ordinary_equivalent_w,
        "ordinary-p": ordinary_equivalent_p,
        "semi-strong": semi_strong_equivalent,
        "p-strong": p_strong_equivalent,
        "w-strong": w_strong_equivalent,
    }
    if mode not in deciders:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    return deciders[mode](l, m)


# ---------------------------------------------------------------------------
# brute-force context oracle


def _fact(a: Literal) -> WeightedRule:
    return WeightedRule(Weight(1.0), Rule(frozenset([a])))


def _implication(a: Literal, b: Literal) -> WeightedRule:
    return WeightedRule(Weight(1.0), Rule(frozenset([a]), frozenset([b])))


def proof_contexts(universe: Iterable[Literal]) -> List[Program]:
    """Contexts ``{1: a. | a in X} + {1: a :- b. | a, b in Y - X}`` for every
    SE-interpretation (X, Y) over the universe, plus the empty context."""
    compiled = Compiled(Program(), universe)
    seen = set()
    out = []
    for y in compiled.consistent_sets():
        sub = y
        while True:
            x_set = compiled.unmask(sub)
            rest = sorted(compiled.unmask(y) - x_set)
            rules = [_fact(a) for a in sorted(x_set)]
            rules += [_implication(a, b) for a in rest for b in rest if a != b]
            key = frozenset(rules)
            if key not in seen:
                seen.add(key)
                out.append(Program(tuple(rules)))
            if sub == 0:
                break
            sub = (sub - 1) & y
    return out


def all_contexts(universe: Iterable[Literal], limit: int = 16) -> Iterable[Program]:
    """Every set of weight-1 facts and weight-1 binary rules over the universe."""
    lits = sorted(universe)
    items = [_fact(a) for a in lits]
    items += [_implication(a, b) for a in lits for b in lits if a != b]
    if len(items) > limit:
        raise CapExceededError(len(items), limit, "exhaustive context")
    for size in range(len(items) + 1):
        for combo in itertools.combinations(items, size):
            yield Program(combo)


def oracle_semi_strong(
    l: Program,
    m: Program,
    fresh_atoms: int = 1,
    family: str = "proof",
    cap: int = ORACLE_CAP,
) -> EquivalenceVerdict:
    """Compare ``SM(l + N)`` and ``SM(m + N)`` over a family of contexts ``N``.

    ``family="proof"`` uses one context per SE-interpretation of the extended
    signature; ``family="all"`` uses every subset of the fact/rule pool and is
    only feasible for two or three literals.
    """
    fresh = [Literal(f"__o{i + 1}") for i in range(fresh_atoms)]
    universe = joint_universe(l, m) | frozenset(fresh)
    if len(universe) > cap:
        raise CapExceededError(len(universe), cap, "oracle")
    if family == "proof":
        contexts = sorted(proof_contexts(universe), key=_context_key)
    elif family == "all":
        contexts = all_contexts(universe)
    else:
        raise ValueError(f"unknown context family {family!r}")
    for n in contexts:
        a = set(stable_models(l | n, universe).models)
        b = set(stable_models(m | n, universe).models)
        if a != b:
            model = min(a ^ b, key=set_sort_key)
            return EquivalenceVerdict(
                "semi-strong", False, n, detail=f"stable model {format_set(model)} differs"
            )
    return EquivalenceVerdict("semi-strong", True)


def _context_key(n: Program) -> Tuple:
    return (len(n), print_program(n))
