"""Symbolic weight degrees ``exp(k*alpha + c)`` and their alpha -> inf limits."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .syntax import WeightedRule, format_real

TOLERANCE = 1e-9


class NoStableModelsError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SymbolicWeight:
    """The exponent ``k*alpha + c`` of a weight degree.

    Multiplying degrees adds exponents, dividing subtracts them. Ordering is
    lexicographic on ``(k, c)``, which is the order of ``exp(k*alpha + c)``
    for all sufficiently large alpha.
    """

    k: int = 0
    c: float = 0.0

    def __mul__(self, other: "SymbolicWeight") -> "SymbolicWeight":
        return SymbolicWeight(self.k + other.k, self.c + other.c)

    def __truediv__(self, other: "SymbolicWeight") -> "SymbolicWeight":
        return SymbolicWeight(self.k - other.k, self.c - other.c)

    def isclose(self, other: "SymbolicWeight", tol: float = TOLERANCE) -> bool:
        return self.k == other.k and abs(self.c - other.c) <= tol

    def is_unit(self, tol: float = TOLERANCE) -> bool:
        return self.isclose(ONE, tol)

    def evaluate_log(self, alpha: float) -> float:
        """Numeric exponent at a concrete alpha."""
        return self.k * alpha + self.c

    def __str__(self) -> str:
        if self.c < 0:
            return f"{self.k}*alpha - {format_real(-self.c)}"
        return f"{self.k}*alpha + {format_real(self.c)}"

    @classmethod
    def parse(cls, text: str) -> "SymbolicWeight":
        m = re.fullmatch(r"\s*(-?\d+)\s*\*\s*alpha\s*([+-])\s*(-?[0-9.eE+-]+)\s*", text)
        if m is None:
            raise ValueError(f"not a degree of the form 'k*alpha + c': {text!r}")
        c = float(m.group(3))
        return cls(int(m.group(1)), -c if m.group(2) == "-" else c)


ONE = SymbolicWeight(0, 0.0)


def degree_of(rules: Iterable[WeightedRule]) -> SymbolicWeight:
    """Weight degree of a multiset of rules: count hard rules, sum soft weights."""
    k = 0
    c = 0.0
    for wr in rules:
        if wr.weight.is_hard:
            k += 1
        else:
            c += wr.weight.value
    return SymbolicWeight(k, c)


def limit_distribution(degrees: Sequence[SymbolicWeight]) -> List[float]:
    """Normalized probabilities in the alpha -> inf limit.

    Only entries with the maximal alpha count survive; among them the soft
    parts are normalized with a log-sum-exp shift.
    """
    if not degrees:
        raise NoStableModelsError("no stable models: distribution undefined")
    kmax = max(d.k for d in degrees)
    top = [d.c for d in degrees if d.k == kmax]
    shift = max(top)
    log_z = shift + math.log(math.fsum(math.exp(c - shift) for c in top))
    return [math.exp(d.c - log_z) if d.k == kmax else 0.0 for d in degrees]
