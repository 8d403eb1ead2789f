"""Canonical DSL printer; output parses back to the same structure."""

from typing import Iterable

from src.syntax.concepts import (
    And, Bottom, Concept, ConceptInclusion, ConceptName, Exists, Forall, Nominal, Not, Nu, Ontology,
    Or, Top, Var,
)


def _operand(concept: Concept) -> str:
    text = render_concept(concept)
    if isinstance(concept, (And, Or)):
        return f"({text})"
    return text


def render_concept(concept: Concept) -> str:
    if isinstance(concept, Top):
        return "top"
    if isinstance(concept, Bottom):
        return "bot"
    if isinstance(concept, ConceptName):
        return concept.name
    if isinstance(concept, Nominal):
        return f"{{{concept.individual}}}"
    if isinstance(concept, Var):
        return concept.variable
    if isinstance(concept, Not):
        return f"not {_operand(concept.child)}"
    if isinstance(concept, And):
        return " and ".join(_operand(child) for child in concept.children)
    if isinstance(concept, Or):
        return " or ".join(_operand(child) for child in concept.children)
    if isinstance(concept, Exists):
        return f"some {concept.role}.{_operand(concept.child)}"
    if isinstance(concept, Forall):
        return f"all {concept.role}.{_operand(concept.child)}"
    if isinstance(concept, Nu):
        return f"nu {concept.variable}.{_operand(concept.child)}"
    raise TypeError(f"Unknown concept node {concept!r}")


def render_inclusion(axiom: ConceptInclusion) -> str:
    return f"{render_concept(axiom.lhs)} [= {render_concept(axiom.rhs)}."


def render_ontology(ontology: Ontology, header: Iterable[str] = ()) -> str:
    lines = [f"# {line}" for line in header]
    lines.extend(render_inclusion(axiom) for axiom in ontology)
    return "\n".join(lines) + ("\n" if lines else "")
