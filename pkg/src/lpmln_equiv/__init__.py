"""Semantics, strong equivalence and simplification for ground LP^MLN programs."""
from .equivalence import (
    EquivalenceVerdict,
    check,
    oracle_semi_strong,
    ordinary_equivalent_p,
    ordinary_equivalent_w,
    p_strong_equivalent,
    semi_strong_equivalent,
    w_strong_equivalent,
)
from .flattening import FlatteningState, build_r, check_prop3, extend, flatten_towards, initial_state
from .se import SEInterpretation, SEModelSet, enumerate_se_models, is_se_model, se_weight, stable_via_se
from .semantics import (
    CapExceededError,
    SolveReport,
    gl_reduct,
    is_stable_model,
    lpmln_reduct,
    map_inference,
    marginal,
    satisfies,
    stable_models,
)
from .simplify import RuleClass, classify_rule, semantic_validity, simplify_and_solve
from .syntax import (
    HARD,
    Literal,
    ParseError,
    Program,
    Rule,
    Weight,
    WeightedRule,
    literal_set,
    parse_program,
    print_program,
    program_literals,
    rule,
)
from .weights import SymbolicWeight, degree_of, limit_distribution

__version__ = "0.1.0"

__all__ = [
    "CapExceededError", "EquivalenceVerdict", "FlatteningState", "HARD", "Literal",
    "ParseError", "Program", "Rule", "RuleClass", "SEInterpretation", "SEModelSet",
    "SolveReport", "SymbolicWeight", "Weight", "WeightedRule", "build_r", "check",
    "check_prop3", "classify_rule", "degree_of", "enumerate_se_models", "extend",
    "flatten_towards", "gl_reduct", "initial_state", "is_se_model", "is_stable_model",
    "limit_distribution", "literal_set", "lpmln_reduct", "map_inference", "marginal",
    "oracle_semi_strong", "ordinary_equivalent_p", "ordinary_equivalent_w",
    "p_strong_equivalent", "parse_program", "print_program", "program_literals", "rule",
    "satisfies", "se_weight", "semantic_validity", "semi_strong_equivalent",
    "simplify_and_solve", "stable_models", "stable_via_se", "w_strong_equivalent",
]
