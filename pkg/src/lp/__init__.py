"""Propositional answer-set programs: HT-models, answer sets and forgetting."""

from src.lp.forgetting import (
    bounded_rule_family, check_forgetting_properties, forget_ht, forgetting_report, ht_projection,
    is_lp_craig_interpolant, is_uniform_interpolant,
)
from src.lp.parser import parse_program, render_program, render_rule
from src.lp.program import EMPTY_PROGRAM, HTPair, LPProgram, LPRule, facts
from src.lp.semantics import (
    Relation, answer_sets, classical_models, entails_lp, exclude, ht_equivalent, ht_models, is_ht_model, is_model,
    reduct,
)

__all__ = [
    "EMPTY_PROGRAM",
    "HTPair",
    "LPProgram",
    "LPRule",
    "Relation",
    "answer_sets",
    "bounded_rule_family",
    "check_forgetting_properties",
    "classical_models",
    "entails_lp",
    "exclude",
    "facts",
    "forget_ht",
    "forgetting_report",
    "ht_equivalent",
    "ht_models",
    "ht_projection",
    "is_ht_model",
    "is_lp_craig_interpolant",
    "is_model",
    "is_uniform_interpolant",
    "parse_program",
    "reduct",
    "render_program",
    "render_rule",
]
