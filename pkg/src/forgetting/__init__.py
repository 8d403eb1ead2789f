"""Uniform interpolation for ALC by resolution over DL clauses with definers."""

from src.forgetting.clauses import (
    DefinerContext, DLClause, Literal, LiteralKind, clause_to_inclusion, clauses_to_ontology, render_clauses,
)
from src.forgetting.clausify import clausify
from src.forgetting.definers import FIXPOINT, Policy, PolicyKind, UIResult, definer_elimination
from src.forgetting.interpolant import forget, render_result, uniform_interpolant
from src.forgetting.saturation import eliminate_symbols, infer_step

__all__ = [
    "DLClause",
    "DefinerContext",
    "FIXPOINT",
    "Literal",
    "LiteralKind",
    "Policy",
    "PolicyKind",
    "UIResult",
    "clause_to_inclusion",
    "clauses_to_ontology",
    "clausify",
    "definer_elimination",
    "eliminate_symbols",
    "forget",
    "infer_step",
    "render_clauses",
    "render_result",
    "uniform_interpolant",
]
