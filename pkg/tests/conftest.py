import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from lpmln_equiv.syntax import HARD, Literal, Program, Rule, Weight, WeightedRule, parse_program

ACCEPTANCE_RESULTS = []

WEIGHTS = (Weight(0.0), Weight(1.0), HARD)


def lits(*names):
    return frozenset(Literal.parse(n) for n in names)


@pytest.fixture
def example1():
    return parse_program("alpha : a v b.\n1 : b :- not a.\n")


def example3(w1, w2, w3, w4):
    def fmt(w):
        return "alpha" if w is None else repr(float(w))

    left = parse_program(f"{fmt(w1)} : a v b.\n{fmt(w2)} : b :- a.\n")
    right = parse_program(f"{fmt(w3)} : b.\n{fmt(w4)} : a :- not b.\n")
    return left, right


def random_rule(rng, pool, weights=WEIGHTS, p=0.35):
    def pick():
        return frozenset(l for l in pool if rng.random() < p)

    return WeightedRule(rng.choice(weights), Rule(pick(), pick(), pick()))


def random_program(rng, pool, max_rules=3, weights=WEIGHTS):
    n = rng.randint(0, max_rules)
    return Program(tuple(random_rule(rng, pool, weights) for _ in range(n)))


@st.composite
def programs(draw, pool=(Literal("a"), Literal("b"), Literal("c"), Literal("a", True)), max_rules=4):
    weight = st.sampled_from(WEIGHTS) | st.floats(-3, 3, allow_nan=False).map(Weight)
    part = st.frozensets(st.sampled_from(pool), max_size=2)
    rule = st.builds(lambda w, h, p, n: WeightedRule(w, Rule(h, p, n)), weight, part, part, part)
    return Program(tuple(draw(st.lists(rule, max_size=max_rules))))


@pytest.fixture
def rng():
    return random.Random(20180709)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
