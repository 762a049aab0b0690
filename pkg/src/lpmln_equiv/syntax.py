"""Ground LP^MLN syntax: literals, rules, weighted rules, programs.

Text format, one statement per rule, ``%`` starts a comment::

    alpha : a v b.
    1 : b :- not a.
    -0.5 : :- a, -b.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

RESERVED_PREFIX = "__"
KEYWORDS = frozenset({"alpha", "not", "v"})


class ParseError(ValueError):
    """Syntax error in program text, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    negated: bool = False

    def __post_init__(self):
        if not self.atom:
            raise ValueError("literal needs a non-empty atom name")

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return "-" + self.atom if self.negated else self.atom

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith("-"):
            return cls(text[1:].strip(), True)
        return cls(text)


LiteralSet = FrozenSet[Literal]


def literal_set(items: Iterable) -> LiteralSet:
    """Build a literal set from Literals or strings like ``"-a"``."""
    return frozenset(x if isinstance(x, Literal) else Literal.parse(x) for x in items)


def is_consistent(lits: Iterable[Literal]) -> bool:
    lits = set(lits)
    return not any(l.complement() in lits for l in lits)


def sorted_literals(lits: Iterable[Literal]) -> List[Literal]:
    return sorted(lits)


def format_set(lits: Iterable[Literal]) -> str:
    """``{a,-b}`` style rendering with deterministic ordering."""
    return "{" + ",".join(str(l) for l in sorted(lits)) + "}"


def set_sort_key(lits: Iterable[Literal]) -> Tuple:
    return tuple(sorted(lits))


@dataclass(frozen=True)
class Rule:
    head: LiteralSet = frozenset()
    pos: LiteralSet = frozenset()
    neg: LiteralSet = frozenset()

    def __post_init__(self):
        for name in ("head", "pos", "neg"):
            object.__setattr__(self, name, literal_set(getattr(self, name)))

    def literals(self) -> LiteralSet:
        return self.head | self.pos | self.neg

    def __str__(self) -> str:
        head = " v ".join(str(l) for l in sorted(self.head))
        body = [str(l) for l in sorted(self.pos)]
        body += ["not " + str(l) for l in sorted(self.neg)]
        if not body:
            return head if head else ":-"
        return f"{head} :- {', '.join(body)}" if head else ":- " + ", ".join(body)


@dataclass(frozen=True)
class Weight:
    """A soft real weight, or the hard weight alpha when ``value`` is None."""

    value: Optional[float] = None

    def __post_init__(self):
        if self.value is not None:
            v = float(self.value)
            if not math.isfinite(v):
                raise ValueError(f"soft weight must be finite, got {self.value!r}")
            object.__setattr__(self, "value", v)

    @property
    def is_hard(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        if self.value is None:
            return "alpha"
        return format_real(self.value)


HARD = Weight(None)


def format_real(x: float) -> str:
    """Shortest round-tripping decimal without a trailing ``.0``."""
    if x == 0:
        return "0"
    text = repr(float(x))
    if text.endswith(".0"):
        text = text[:-2]
    return text


@dataclass(frozen=True)
class WeightedRule:
    weight: Weight
    rule: Rule

    @property
    def is_hard(self) -> bool:
        return self.weight.is_hard

    def __str__(self) -> str:
        return f"{self.weight} : {self.rule}."


@dataclass(frozen=True)
class Program:
    """An ordered list of weighted rules; duplicates are separate occurrences."""

    rules: Tuple[WeightedRule, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    def __iter__(self) -> Iterator[WeightedRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __or__(self, other: "Program") -> "Program":
        return Program(self.rules + tuple(other.rules))

    def unweighted(self) -> List[Rule]:
        return [wr.rule for wr in self.rules]

    def literals(self) -> LiteralSet:
        return program_literals(self)

    def __str__(self) -> str:
        return print_program(self)


def program_literals(p: Program) -> LiteralSet:
    out: set = set()
    for wr in p.rules:
        out |= wr.rule.literals()
    return frozenset(out)


def rule(text: str, weight=None) -> WeightedRule:
    """Convenience constructor: ``rule("a :- not b", 1)``; weight None is hard."""
    stmt = text.strip()
    if not stmt.endswith("."):
        stmt += "."
    w = "alpha" if weight is None else format_real(float(weight))
    (wr,) = parse_program(f"{w} : {stmt}").rules
    return wr


# ---------------------------------------------------------------------------
# parser

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|%[^\n]*)
  | (?P<if>:-)
  | (?P<colon>:)
  | (?P<num>-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[-.,|])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, tok, line, pos - line_start + 1))
        for i, ch in enumerate(tok):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_reserved: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_reserved = allow_reserved

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{message}, found {found!r}", tok.line, tok.col)

    def advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def expect(self, kind: str, text: Optional[str] = None, what: str = "") -> _Token:
        if not self.at(kind, text):
            self.error(f"expected {what or text or kind}")
        return self.advance()

    def program(self) -> Program:
        rules = []
        while not self.at("eof"):
            rules.append(self.statement())
        return Program(tuple(rules))

    def statement(self) -> WeightedRule:
        weight = self.weight()
        self.expect("colon", what="':' after weight")
        head: set = set()
        pos: set = set()
        neg: set = set()
        if not self.at("if"):
            head.add(self.literal())
            while self.at("ident", "v") or self.at("punct", "|"):
                self.advance()
                head.add(self.literal())
        if self.at("if"):
            self.advance()
            if not self.at("punct", "."):
                self.body_literal(pos, neg)
                while self.at("punct", ","):
                    self.advance()
                    self.body_literal(pos, neg)
        self.expect("punct", ".", what="'.' at end of rule")
        return WeightedRule(weight, Rule(frozenset(head), frozenset(pos), frozenset(neg)))

    def weight(self) -> Weight:
        tok = self.tok
        if self.at("ident", "alpha"):
            self.advance()
            return HARD
        if tok.kind == "num":
            self.advance()
            return Weight(float(tok.text))
        self.error("expected a weight (a real number or 'alpha')")

    def body_literal(self, pos: set, neg: set):
        if self.at("ident", "not"):
            self.advance()
            neg.add(self.literal())
        else:
            pos.add(self.literal())

    def literal(self) -> Literal:
        negated = False
        if self.at("punct", "-"):
            self.advance()
            negated = True
        tok = self.tok
        if tok.kind != "ident":
            self.error("expected a literal")
        if tok.text in KEYWORDS:
            self.error(f"'{tok.text}' is reserved and cannot name an atom")
        if tok.text.startswith(RESERVED_PREFIX) and not self.allow_reserved:
            self.error(f"atom names starting with '{RESERVED_PREFIX}' are reserved")
        self.advance()
        return Literal(tok.text, negated)


def parse_program(text: str, allow_reserved: bool = False) -> Program:
    """Parse program text. Raises ParseError with line/column on bad input."""
    return _Parser(text, allow_reserved).program()


def print_program(p: Program) -> str:
    return "".join(f"{wr}\n" for wr in p.rules)
