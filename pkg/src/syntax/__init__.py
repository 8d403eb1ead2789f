"""Concept language: AST, DSL parser and printer, structural operations."""

from src.syntax.concepts import (
    BOTTOM, EMPTY_ONTOLOGY, EMPTY_SIGNATURE, TOP, And, Bottom, Concept, ConceptInclusion, ConceptName,
    Exists, Forall, Nominal, Not, Nu, Ontology, Or, Signature, Top, Var, conjunction, disjunction,
)
from src.syntax.operations import (
    closure_gamma, negate, nnf, rename_outside, role_depth, sig_and_depth, signature,
)
from src.syntax.parser import parse_concept, parse_names, parse_ontology
from src.syntax.render import render_concept, render_inclusion, render_ontology
from src.syntax.simplify import simplify, simplify_ontology

__all__ = [
    "BOTTOM", "EMPTY_ONTOLOGY", "EMPTY_SIGNATURE", "TOP", "And", "Bottom", "Concept", "ConceptInclusion",
    "ConceptName", "Exists", "Forall", "Nominal", "Not", "Nu", "Ontology", "Or", "Signature", "Top", "Var",
    "conjunction", "disjunction", "closure_gamma", "negate", "nnf", "rename_outside", "role_depth",
    "sig_and_depth", "signature", "parse_concept", "parse_names", "parse_ontology", "render_concept",
    "render_inclusion", "render_ontology", "simplify", "simplify_ontology",
]
