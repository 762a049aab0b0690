"""Flattening extensions: grow a program with hard gadgets so that chosen
interpretations end up satisfying the maximal number of hard rules."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .semantics import DEFAULT_CAP, Compiled, SolveReport, stable_models
from .syntax import (
    HARD,
    RESERVED_PREFIX,
    Literal,
    LiteralSet,
    Program,
    Rule,
    WeightedRule,
    format_set,
    is_consistent,
    literal_set,
    print_program,
    program_literals,
    set_sort_key,
)
from .weights import SymbolicWeight


class FlatteningError(ValueError):
    pass


def build_r(x: Iterable[Literal], y: Iterable[Literal], a: Literal) -> Program:
    """The gadget ``alpha: :- X, not Y, a.`` and ``alpha: a :- X, not Y.``"""
    x = literal_set(x)
    y = literal_set(y)
    a = a if isinstance(a, Literal) else Literal.parse(a)
    if not is_consistent(x) or not is_consistent(y):
        raise FlatteningError("X and Y must be consistent")
    if a.negated:
        raise FlatteningError(f"gadget atom {a} must be a positive literal")
    if a in x | y:
        raise FlatteningError(f"gadget atom {a} occurs in X or Y")
    return Program(
        (
            WeightedRule(HARD, Rule(frozenset(), x | {a}, y)),
            WeightedRule(HARD, Rule(frozenset([a]), x, y)),
        )
    )


@dataclass(frozen=True)
class FlatteningState:
    base: Program
    universe: LiteralSet
    stage: int
    fresh: Tuple[Literal, ...]
    program: Program
    targets: Tuple[LiteralSet, ...] = ()

    @property
    def signature(self) -> LiteralSet:
        return self.universe | frozenset(self.fresh)

    def solve(self, cap: int = DEFAULT_CAP) -> SolveReport:
        return stable_models(self.program, self.signature, cap)

    def probabilistic(self, cap: int = DEFAULT_CAP) -> List[LiteralSet]:
        return [e.model for e in self.solve(cap) if e.is_probabilistic]

    def to_text(self) -> str:
        header = f"% stage {self.stage}, universe {format_set(self.universe)}"
        if self.fresh:
            header += ", fresh " + ",".join(str(a) for a in self.fresh)
        return header + "\n" + print_program(self.program)


def initial_state(m: Program, universe: Iterable[Literal]) -> FlatteningState:
    """``T^0``: the base program plus a hard fact for every universe literal."""
    universe = literal_set(universe)
    missing = program_literals(m) - universe
    if missing:
        raise FlatteningError(f"universe misses program literals {format_set(missing)}")
    facts = tuple(WeightedRule(HARD, Rule(frozenset([l]))) for l in sorted(universe))
    return FlatteningState(m, universe, 0, (), m | Program(facts))


def extend(
    state: FlatteningState,
    target: Iterable[Literal],
    fresh: Optional[str] = None,
    cap: int = DEFAULT_CAP,
) -> FlatteningState:
    """Add ``R(target & U, U - target, a)`` for a fresh atom ``a``.

    ``target`` must be a probabilistic stable model of the current program.
    """
    target = literal_set(target)
    if target not in state.probabilistic(cap):
        raise FlatteningError(
            f"{format_set(target)} is not a probabilistic stable model at stage {state.stage}"
        )
    name = fresh or f"{RESERVED_PREFIX}f{state.stage + 1}"
    atom = Literal(name)
    used = {l.atom for l in state.signature | program_literals(state.program)}
    if atom.atom in used:
        raise FlatteningError(f"atom {name} is not fresh")
    gadget = build_r(target & state.universe, state.universe - target, atom)
    return FlatteningState(
        state.base,
        state.universe,
        state.stage + 1,
        state.fresh + (atom,),
        state.program | gadget,
        state.targets + (target,),
    )


@dataclass
class Prop3Report:
    """Outcome of the four flattening checks; failures are listed, not raised."""

    initial_models: bool = True
    model_growth: bool = True
    degree_step: bool = True
    projection_degrees: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.initial_models and self.model_growth and self.degree_step and self.projection_degrees

    def as_dict(self) -> Dict[str, bool]:
        return {
            "initial_models": self.initial_models,
            "model_growth": self.model_growth,
            "degree_step": self.degree_step,
            "projection_degrees": self.projection_degrees,
        }


def consistent_subsets(universe: Iterable[Literal]) -> List[LiteralSet]:
    compiled = Compiled(Program(), universe)
    return [compiled.unmask(x) for x in compiled.consistent_sets()]


def check_prop3(
    before: FlatteningState,
    after: FlatteningState,
    target: Iterable[Literal],
    cap: int = DEFAULT_CAP,
) -> Prop3Report:
    target = literal_set(target)
    u = before.universe
    report = Prop3Report()

    t0 = initial_state(before.base, u)
    sm0 = set(t0.solve(cap).models)
    if sm0 != set(consistent_subsets(u)):
        report.initial_models = False
        report.failures.append("stage 0 stable models are not the consistent subsets of U")

    new_atom = after.fresh[-1]
    rb = before.solve(cap)
    ra = after.solve(cap)
    expected = set(rb.models) | {y | {new_atom} for y in rb.models if y & u == target & u}
    if set(ra.models) != expected:
        report.model_growth = False
        extra = sorted(format_set(s) for s in set(ra.models) ^ expected)
        report.failures.append("stable models after extension differ on " + ", ".join(extra))

    for e in rb:
        step = SymbolicWeight(1 if e.model & u == target & u else 2, 0.0)
        want = e.degree * step
        if e.model in set(ra.models):
            got = ra.entry(e.model).degree
            if not got.isclose(want):
                report.degree_step = False
                report.failures.append(f"degree of {format_set(e.model)}: {got}, expected {want}")
        else:
            report.degree_step = False
            report.failures.append(f"{format_set(e.model)} lost after extension")

    for r in (rb, ra):
        by_projection: Dict[LiteralSet, SymbolicWeight] = {}
        for e in r:
            proj = e.model & u
            if proj in by_projection and not by_projection[proj].isclose(e.degree):
                report.projection_degrees = False
                report.failures.append(
                    f"models agreeing on {format_set(proj)} have degrees "
                    f"{by_projection[proj]} and {e.degree}"
                )
            by_projection.setdefault(proj, e.degree)
    return report


def flatten_towards(
    m: Program,
    universe: Iterable[Literal],
    wanted: Sequence[Iterable[Literal]],
    max_steps: int = 64,
    cap: int = DEFAULT_CAP,
) -> FlatteningState:
    """Extend ``T^0`` until every wanted subset of U projects a probabilistic
    stable model, always extending with the smallest probabilistic model."""
    state = initial_state(m, universe)
    wanted_sets = [literal_set(w) & state.universe for w in wanted]
    for _ in range(max_steps + 1):
        psm = state.probabilistic(cap)
        projections = {x & state.universe for x in psm}
        if all(w in projections for w in wanted_sets):
            return state
        if state.stage == max_steps:
            break
        state = extend(state, min(psm, key=set_sort_key), cap=cap)
    raise FlatteningError(f"no flattening within {max_steps} steps")
