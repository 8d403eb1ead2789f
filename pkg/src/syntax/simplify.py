"""Equivalence-preserving rewrites that keep results readable."""

from typing import List

from src.exceptions import PreconditionError
from src.syntax.concepts import (
    And, BOTTOM, Bottom, Concept, ConceptInclusion, Exists, Forall, Not, Nu, Ontology, Or, TOP, Top,
    children_of, conjunction, disjunction,
)
from src.syntax.operations import free_variables, map_concept, nnf, substitute_var
from src.syntax.render import render_concept


def _complement(concept: Concept) -> Concept:
    return concept.child if isinstance(concept, Not) else Not(concept)


def _simplify_junction(children: List[Concept], is_and: bool) -> Concept:
    unit, zero = (Top, Bottom) if is_and else (Bottom, Top)
    kind = And if is_and else Or
    dual = Or if is_and else And
    flat: List[Concept] = []
    for child in children:
        if isinstance(child, kind):
            flat.extend(child.children)
        else:
            flat.append(child)
    unique = {}
    for child in flat:
        if isinstance(child, zero):
            return child
        if isinstance(child, unit):
            continue
        unique.setdefault(child, None)
    members = list(unique)
    present = set(members)
    if any(_complement(child) in present for child in members):
        return BOTTOM if is_and else TOP
    # absorption: X and (X or Y) = X, X or (X and Y) = X
    members = [child for child in members
               if not (isinstance(child, dual) and any(part in present for part in child.children))]
    members.sort(key=render_concept)
    return conjunction(members) if is_and else disjunction(members)


def _simplify_node(node: Concept) -> Concept:
    if isinstance(node, Not):
        if isinstance(node.child, Top):
            return BOTTOM
        if isinstance(node.child, Bottom):
            return TOP
        if isinstance(node.child, Not):
            return node.child.child
        return node
    if isinstance(node, And):
        return _simplify_junction(list(node.children), True)
    if isinstance(node, Or):
        return _simplify_junction(list(node.children), False)
    if isinstance(node, Exists) and isinstance(node.child, Bottom):
        return BOTTOM
    if isinstance(node, Forall) and isinstance(node.child, Top):
        return TOP
    if isinstance(node, Nu) and node.variable not in free_variables(node.child):
        return node.child
    return node


def fold_fixpoint(node: Concept) -> Concept:
    """Replace ``B[X := nu X.B]`` by ``nu X.B`` when a direct child is that fixpoint."""
    for child in children_of(node):
        if isinstance(child, Nu) and substitute_var(child.child, child.variable, child) == node:
            return child
    return node


def simplify(concept: Concept) -> Concept:
    try:
        concept = nnf(concept)
    except PreconditionError:
        pass
    previous = None
    while previous != concept:
        previous = concept
        concept = map_concept(concept, lambda node: fold_fixpoint(_simplify_node(node)))
    return concept


def simplify_ontology(ontology: Ontology) -> Ontology:
    """Simplify both sides of every axiom and drop tautological axioms."""
    axioms = []
    for axiom in ontology:
        lhs, rhs = simplify(axiom.lhs), simplify(axiom.rhs)
        if isinstance(rhs, Top) or isinstance(lhs, Bottom) or lhs == rhs:
            continue
        axioms.append(ConceptInclusion(lhs, rhs))
    return Ontology(tuple(axioms))
