"""SE-interpretations and SE-models of LP^MLN programs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .semantics import CapExceededError, Compiled, InconsistentSetError
from .syntax import (
    Literal,
    LiteralSet,
    Program,
    format_set,
    is_consistent,
    literal_set,
    set_sort_key,
)
from .weights import SymbolicWeight

SE_CAP = 12


@dataclass(frozen=True)
class SEInterpretation:
    lower: LiteralSet
    upper: LiteralSet

    def __post_init__(self):
        lower = literal_set(self.lower)
        upper = literal_set(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if not lower <= upper:
            raise ValueError(f"{format_set(lower)} is not a subset of {format_set(upper)}")
        if not is_consistent(upper):
            raise InconsistentSetError(f"{format_set(upper)} is inconsistent")

    @property
    def total(self) -> bool:
        return self.lower == self.upper

    def sort_key(self) -> Tuple:
        return (set_sort_key(self.upper), set_sort_key(self.lower))

    def __str__(self) -> str:
        return f"({format_set(self.lower)} | {format_set(self.upper)})"


class SEModelSet:
    """SE-models of a program over a universe, with their weight degrees.

    Weights are stored per upper set only, since ``W(M,(X,Y)) = W(M_Y)``.
    """

    def __init__(
        self,
        models: Iterable[SEInterpretation],
        upper_weights: Dict[LiteralSet, SymbolicWeight],
        universe: LiteralSet,
    ):
        self.models: Tuple[SEInterpretation, ...] = tuple(
            sorted(set(models), key=SEInterpretation.sort_key)
        )
        self.upper_weights = dict(upper_weights)
        self.universe = frozenset(universe)

    def __iter__(self) -> Iterator[SEInterpretation]:
        return iter(self.models)

    def __len__(self) -> int:
        return len(self.models)

    def __contains__(self, se: SEInterpretation) -> bool:
        return se in self.as_set()

    def as_set(self) -> FrozenSet[SEInterpretation]:
        return frozenset(self.models)

    def weight(self, se: SEInterpretation) -> SymbolicWeight:
        if se not in self:
            raise KeyError(str(se))
        return self.upper_weights[se.upper]

    def non_total(self) -> List[SEInterpretation]:
        return [se for se in self.models if not se.total]

    def to_text(self) -> str:
        return "".join(f"{se} :: {self.weight(se)}\n" for se in self.models)


def _compile(m: Program, universe: Iterable[Literal], cap: Optional[int]) -> Compiled:
    compiled = Compiled(m, universe)
    if cap is not None and len(compiled) > cap:
        raise CapExceededError(len(compiled), cap, "SE enumeration")
    return compiled


def is_se_model(m: Program, se: SEInterpretation) -> bool:
    """``X`` and ``Y`` both satisfy the GL-reduct (w.r.t. Y) of the LP^MLN reduct ``M_Y``."""
    compiled = Compiled(m, se.upper)
    y = compiled.mask(se.upper)
    reduct = compiled.reduct(y)
    return compiled.models(compiled.mask(se.lower), reduct) and compiled.models(y, reduct)


def se_weight(m: Program, se: SEInterpretation) -> SymbolicWeight:
    if not is_se_model(m, se):
        raise ValueError(f"{se} is not an SE-model of the program")
    compiled = Compiled(m, se.upper)
    return compiled.degree(compiled.mask(se.upper))


def _submasks(y: int) -> Iterator[int]:
    sub = y
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & y


def enumerate_se_models(
    m: Program, universe: Optional[Iterable[Literal]] = None, cap: int = SE_CAP
) -> SEModelSet:
    """All SE-models (X, Y) with Y a consistent subset of the universe."""
    compiled = _compile(m, universe or (), cap)
    models = []
    weights = {}
    for y in compiled.consistent_sets():
        reduct = compiled.reduct(y)
        upper = compiled.unmask(y)
        weights[upper] = compiled.degree(y)
        if not compiled.models(y, reduct):
            continue
        for x in _submasks(y):
            if compiled.models(x, reduct):
                models.append(SEInterpretation(compiled.unmask(x), upper))
    return SEModelSet(models, weights, frozenset(compiled.literals))


def stable_via_se(m: Program, x: LiteralSet) -> bool:
    """Stable iff no proper subset ``X'`` gives an SE-model ``(X', x)``."""
    x = literal_set(x)
    if not is_consistent(x):
        raise InconsistentSetError(f"{format_set(x)} is inconsistent")
    compiled = Compiled(m, x)
    y = compiled.mask(x)
    for sub in _submasks(y):
        if sub != y and is_se_model(m, SEInterpretation(compiled.unmask(sub), x)):
            return False
    return True
