"""Satisfaction, reducts, stable models, and MAP / marginal inference.

Literal sets are ``frozenset[Literal]`` at the API boundary. Internally a
program is compiled against an indexed universe and every interpretation is
an int bitmask, which keeps exhaustive enumeration cheap at desk scale.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .syntax import (
    Literal,
    LiteralSet,
    Program,
    Rule,
    format_set,
    is_consistent,
    program_literals,
    set_sort_key,
)
from .weights import (
    NoStableModelsError,
    SymbolicWeight,
    TOLERANCE,
    limit_distribution,
)

DEFAULT_CAP = 16


class CapExceededError(ValueError):
    """Universe too large for exhaustive enumeration."""

    def __init__(self, size: int, cap: int, what: str = "enumeration"):
        super().__init__(
            f"universe has {size} literals, exceeding the {what} cap of {cap}; "
            "raise the cap explicitly if you really want this"
        )
        self.size = size
        self.cap = cap


class InconsistentSetError(ValueError):
    pass


def _check_consistent(x: Iterable[Literal]):
    if not is_consistent(x):
        raise InconsistentSetError(f"literal set {format_set(x)} is inconsistent")


# ---------------------------------------------------------------------------
# set-level definitions


def satisfies(x: LiteralSet, r: Rule) -> bool:
    """ASP satisfaction: if the body holds in ``x`` then some head literal does."""
    _check_consistent(x)
    return _satisfies(x, r)


def _satisfies(x: LiteralSet, r: Rule) -> bool:
    body = r.pos <= x and not (r.neg & x)
    return not body or bool(r.head & x)


def lpmln_reduct(m: Program, x: LiteralSet) -> Program:
    """Weighted rules of ``m`` satisfied by ``x``, multiplicity preserved."""
    _check_consistent(x)
    return Program(tuple(wr for wr in m.rules if _satisfies(x, wr.rule)))


def gl_reduct(p: Iterable[Rule], x: LiteralSet) -> List[Rule]:
    """Gelfond-Lifschitz reduct: drop rules blocked by ``x``, strip negative bodies."""
    _check_consistent(x)
    return [Rule(r.head, r.pos) for r in p if not (r.neg & x)]


# ---------------------------------------------------------------------------
# compiled form


class Compiled:
    """A program compiled to bitmasks over a fixed literal universe."""

    def __init__(self, program: Program, universe: Iterable[Literal] = ()):
        lits = set(program_literals(program)) | set(universe)
        self.program = program
        self.literals: List[Literal] = sorted(lits)
        self.index: Dict[Literal, int] = {l: i for i, l in enumerate(self.literals)}
        self.rules: List[Tuple[int, int, int]] = []
        self.hard: List[bool] = []
        self.soft: List[float] = []
        for wr in program.rules:
            r = wr.rule
            self.rules.append((self.mask(r.head), self.mask(r.pos), self.mask(r.neg)))
            self.hard.append(wr.weight.is_hard)
            self.soft.append(0.0 if wr.weight.is_hard else wr.weight.value)
        # per atom: the bits of its polarities present in the universe
        atoms: Dict[str, List[int]] = {}
        for l in self.literals:
            atoms.setdefault(l.atom, []).append(1 << self.index[l])
        self.atom_options = [[0] + bits for _, bits in sorted(atoms.items())]

    def __len__(self) -> int:
        return len(self.literals)

    def mask(self, lits: Iterable[Literal]) -> int:
        bits = 0
        for l in lits:
            bits |= 1 << self.index[l]
        return bits

    def unmask(self, bits: int) -> LiteralSet:
        return frozenset(l for i, l in enumerate(self.literals) if bits >> i & 1)

    def consistent_sets(self) -> Iterator[int]:
        """Every consistent subset of the universe, as a bitmask."""
        for combo in itertools.product(*self.atom_options):
            bits = 0
            for b in combo:
                bits |= b
            yield bits

    def satisfied(self, x: int) -> List[int]:
        """Indices of rules satisfied by ``x``."""
        out = []
        for i, (h, p, n) in enumerate(self.rules):
            if (p & ~x) or (n & x) or (h & x):
                out.append(i)
        return out

    def degree(self, x: int) -> SymbolicWeight:
        k = 0
        c = 0.0
        for i in self.satisfied(x):
            if self.hard[i]:
                k += 1
            else:
                c += self.soft[i]
        return SymbolicWeight(k, c)

    def reduct(self, y: int) -> List[Tuple[int, int]]:
        """GL-reduct w.r.t. ``y`` of the unweighted LP^MLN reduct w.r.t. ``y``."""
        return [
            (h, p)
            for (h, p, n) in (self.rules[i] for i in self.satisfied(y))
            if not (n & y)
        ]

    @staticmethod
    def models(x: int, positive: Sequence[Tuple[int, int]]) -> bool:
        for h, p in positive:
            if not (p & ~x) and not (h & x):
                return False
        return True

    def is_stable(self, x: int) -> bool:
        reduct = self.reduct(x)
        if not self.models(x, reduct):
            return False
        # minimality over proper subsets of x
        sub = (x - 1) & x
        while True:
            if sub != x and self.models(sub, reduct):
                return False
            if sub == 0:
                return True
            sub = (sub - 1) & x

    def stable_sets(self) -> List[int]:
        return [x for x in self.consistent_sets() if self.is_stable(x)]


def compile_program(
    m: Program, universe: Optional[Iterable[Literal]] = None, cap: int = DEFAULT_CAP
) -> Compiled:
    compiled = Compiled(m, universe or ())
    if len(compiled) > cap:
        raise CapExceededError(len(compiled), cap)
    return compiled


# ---------------------------------------------------------------------------
# stable models


def is_stable_model(m: Program, x: LiteralSet) -> bool:
    """Whether ``x`` is a stable model of the unweighted reduct ``M_x``."""
    _check_consistent(x)
    compiled = Compiled(m, x)
    return compiled.is_stable(compiled.mask(x))


@dataclass(frozen=True)
class SolveEntry:
    model: LiteralSet
    degree: SymbolicWeight
    probability: float
    is_probabilistic: bool

    def as_dict(self) -> dict:
        return {
            "model": [str(l) for l in sorted(self.model)],
            "degree": str(self.degree),
            "probability": round(self.probability, 6),
            "probabilistic": self.is_probabilistic,
        }


@dataclass(frozen=True)
class SolveReport:
    entries: Tuple[SolveEntry, ...]

    def __iter__(self) -> Iterator[SolveEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def models(self) -> List[LiteralSet]:
        return [e.model for e in self.entries]

    def entry(self, model: Iterable[Literal]) -> SolveEntry:
        model = frozenset(model)
        for e in self.entries:
            if e.model == model:
                return e
        raise KeyError(format_set(model))

    def probability(self, model: Iterable[Literal]) -> float:
        return self.entry(model).probability

    def to_table(self) -> str:
        rows = [("model", "degree", "probability", "probabilistic")]
        for e in self.entries:
            rows.append(
                (
                    format_set(e.model),
                    str(e.degree),
                    f"{e.probability:.6f}",
                    "true" if e.is_probabilistic else "false",
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        return "".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
            for row in rows
        )

    def to_json(self) -> str:
        return json.dumps([e.as_dict() for e in self.entries], indent=2)


def build_report(pairs: Sequence[Tuple[LiteralSet, SymbolicWeight]]) -> SolveReport:
    """Attach limit probabilities to (model, degree) pairs and sort them."""
    if not pairs:
        return SolveReport(())
    probs = limit_distribution([d for _, d in pairs])
    kmax = max(d.k for _, d in pairs)
    entries = [
        SolveEntry(model, degree, prob, degree.k == kmax)
        for (model, degree), prob in zip(pairs, probs)
    ]
    entries.sort(key=lambda e: (-e.degree.k, -round(e.degree.c, 9), set_sort_key(e.model)))
    return SolveReport(tuple(entries))


def stable_models(
    m: Program, universe: Optional[Iterable[Literal]] = None, cap: int = DEFAULT_CAP
) -> SolveReport:
    """All stable models with degrees and limit probabilities."""
    compiled = compile_program(m, universe, cap)
    pairs = [(compiled.unmask(x), compiled.degree(x)) for x in compiled.stable_sets()]
    return build_report(pairs)


def map_inference(m: Program, cap: int = DEFAULT_CAP) -> List[LiteralSet]:
    """Stable models of maximal degree (ties all returned)."""
    report = stable_models(m, cap=cap)
    if not len(report):
        raise NoStableModelsError("no stable models: MAP undefined")
    best = report.entries[0].degree
    return [e.model for e in report if e.degree.isclose(best, TOLERANCE)]


def marginal(m: Program, lit: Literal, cap: int = DEFAULT_CAP) -> float:
    """Probability that ``lit`` holds, summed over stable models."""
    report = stable_models(m, cap=cap)
    if not len(report):
        raise NoStableModelsError("no stable models: marginal undefined")
    return sum(e.probability for e in report if lit in e.model)
