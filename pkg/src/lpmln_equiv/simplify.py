"""Rule classification (TAUT, CONTRA, CONSTR1-3) and simplify-then-solve."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .equivalence import p_strong_equivalent, semi_strong_equivalent
from .semantics import DEFAULT_CAP, build_report, compile_program, SolveReport
from .syntax import Literal, Program, WeightedRule

VALID = "valid"
SEMI_VALID = "semi-valid"
NEITHER = "neither"


@dataclass(frozen=True)
class RuleClass:
    taut: bool
    contra: bool
    constr1: bool
    constr2: bool
    constr3: bool
    verdict: str

    @property
    def flags(self) -> List[str]:
        names = ("TAUT", "CONTRA", "CONSTR1", "CONSTR2", "CONSTR3")
        values = (self.taut, self.contra, self.constr1, self.constr2, self.constr3)
        return [n for n, v in zip(names, values) if v]

    def label(self) -> str:
        return " ".join(self.flags + [self.verdict])


def classify_rule(wr: WeightedRule) -> RuleClass:
    r = wr.rule
    taut = bool(r.head & r.pos)
    contra = bool(r.pos & r.neg)
    constr1 = not r.head
    constr2 = r.head <= r.neg
    constr3 = not r.head and not r.pos and not r.neg
    zero = not wr.weight.is_hard and wr.weight.value == 0.0
    if taut or contra or constr3 or ((constr1 or constr2) and zero):
        verdict = VALID
    elif constr1 or constr2:
        verdict = SEMI_VALID
    else:
        verdict = NEITHER
    return RuleClass(taut, contra, constr1, constr2, constr3, verdict)


def semantic_validity(wr: WeightedRule) -> str:
    """Validity decided by comparing ``{wr}`` with the empty program through SE-models."""
    single = Program((wr,))
    if not semi_strong_equivalent(single, Program()).holds:
        return NEITHER
    if p_strong_equivalent(single, Program()).holds:
        return VALID
    return SEMI_VALID


@dataclass(frozen=True)
class Removal:
    position: int
    rule: WeightedRule
    rule_class: RuleClass

    def __str__(self) -> str:
        flags = ",".join(self.rule_class.flags) or "-"
        return f"REMOVED {flags} {self.rule_class.verdict}: {self.rule}"


@dataclass(frozen=True)
class SimplificationLog:
    removed: Tuple[Removal, ...]
    kept: Program
    semi_valid: Program

    def to_text(self) -> str:
        return "".join(f"{r}\n" for r in self.removed)


def _verdict(wr: WeightedRule, method: str) -> Tuple[str, RuleClass]:
    rc = classify_rule(wr)
    if method == "syntactic":
        return rc.verdict, rc
    if method == "semantic":
        return semantic_validity(wr), rc
    raise ValueError(f"unknown classification method {method!r}")


def simplify(m: Program, method: str = "syntactic") -> SimplificationLog:
    """Drop valid rules; set semi-valid rules aside for re-weighting."""
    kept, aside, removed = [], [], []
    for pos, wr in enumerate(m.rules):
        verdict, rc = _verdict(wr, method)
        if verdict == NEITHER:
            kept.append(wr)
            continue
        if verdict == SEMI_VALID:
            aside.append(wr)
        if rc.verdict != verdict:
            rc = RuleClass(rc.taut, rc.contra, rc.constr1, rc.constr2, rc.constr3, verdict)
        removed.append(Removal(pos, wr, rc))
    return SimplificationLog(tuple(removed), Program(tuple(kept)), Program(tuple(aside)))


def simplify_and_solve(
    m: Program,
    universe: Optional[Iterable[Literal]] = None,
    method: str = "syntactic",
    cap: int = DEFAULT_CAP,
) -> Tuple[SolveReport, SimplificationLog]:
    """Solve the simplified program, then weigh each model by the kept and
    semi-valid rules it satisfies."""
    log = simplify(m, method)
    solver = compile_program(log.kept, universe, cap)
    scorer = compile_program(log.kept | log.semi_valid, solver.literals, cap)
    pairs = []
    for x in solver.stable_sets():
        model = solver.unmask(x)
        pairs.append((model, scorer.degree(scorer.mask(model))))
    return build_report(pairs), log
