"""Slow reference implementations straight from the definitions.

Nothing here imports the engine's enumeration code; interpretations are
plain frozensets and every subset pair is checked independently.
"""
from itertools import combinations

import mpmath

from lpmln_equiv.syntax import is_consistent


def subsets(universe):
    lits = sorted(universe)
    return [frozenset(c) for n in range(len(lits) + 1) for c in combinations(lits, n)]


def consistent_subsets(universe):
    return [s for s in subsets(universe) if is_consistent(s)]


def sat(x, r):
    return not (r.pos <= x and not (r.neg & x)) or bool(r.head & x)


def positive_reduct(m, y):
    kept = [wr.rule for wr in m if sat(y, wr.rule)]
    return [(r.head, r.pos) for r in kept if not (r.neg & y)]


def models(x, positive):
    return all(not (p <= x) or (h & x) for h, p in positive)


def degree(m, x):
    sat_rules = [wr for wr in m if sat(x, wr.rule)]
    k = sum(1 for wr in sat_rules if wr.weight.is_hard)
    c = sum(wr.weight.value for wr in sat_rules if not wr.weight.is_hard)
    return k, c


def stable_models(m, universe):
    cands = consistent_subsets(universe)
    out = []
    for x in cands:
        reduct = positive_reduct(m, x)
        if not models(x, reduct):
            continue
        if any(y < x and models(y, reduct) for y in cands):
            continue
        out.append(x)
    return out


def probabilities(m, universe, alpha=1000):
    """P(M, X) evaluated at a concrete alpha with 60-digit arithmetic."""
    sm = stable_models(m, universe)
    with mpmath.workdps(60):
        w = {}
        for x in sm:
            k, c = degree(m, x)
            w[x] = mpmath.exp(k * alpha + mpmath.mpf(c))
        z = sum(w.values())
        return {x: float(w[x] / z) for x in sm}


def se_models(m, universe):
    out = set()
    for y in consistent_subsets(universe):
        reduct = positive_reduct(m, y)
        for x in subsets(y):
            if models(x, reduct) and models(y, reduct):
                out.add((x, y))
    return out
