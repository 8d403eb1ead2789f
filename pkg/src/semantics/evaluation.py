"""Concept extensions in finite interpretations."""

from typing import FrozenSet, Mapping, Optional

from src.exceptions import FixpointVariableError
from src.semantics.interpretation import Interpretation
from src.syntax.concepts import (
    And, Bottom, Concept, ConceptInclusion, ConceptName, Exists, Forall, Nominal, Not, Nu, Ontology, Or,
    Top, Var,
)


def extension_eval(interpretation: Interpretation, concept: Concept,
                   env: Optional[Mapping[str, FrozenSet[int]]] = None) -> FrozenSet[int]:
    """Extension of ``concept``; names missing from the interpretation are empty.

    ``nu X.B`` is the greatest fixpoint, reached by iterating ``B`` downwards
    from the whole domain.
    """
    env = env or {}
    domain = frozenset(interpretation.domain)

    def ev(node: Concept, bound: Mapping[str, FrozenSet[int]]) -> FrozenSet[int]:
        if isinstance(node, Top):
            return domain
        if isinstance(node, Bottom):
            return frozenset()
        if isinstance(node, ConceptName):
            return interpretation.extension(node.name)
        if isinstance(node, Nominal):
            element = interpretation.individuals.get(node.individual)
            return frozenset() if element is None else frozenset({element})
        if isinstance(node, Var):
            if node.variable not in bound:
                raise FixpointVariableError(f"unbound fixpoint variable {node.variable}")
            return bound[node.variable]
        if isinstance(node, Not):
            return domain - ev(node.child, bound)
        if isinstance(node, And):
            result = domain
            for child in node.children:
                result &= ev(child, bound)
            return result
        if isinstance(node, Or):
            result = frozenset()
            for child in node.children:
                result |= ev(child, bound)
            return result
        if isinstance(node, Exists):
            filler = ev(node.child, bound)
            return frozenset(d for d in domain if interpretation.successors(node.role, d) & filler)
        if isinstance(node, Forall):
            filler = ev(node.child, bound)
            return frozenset(d for d in domain if interpretation.successors(node.role, d) <= filler)
        if isinstance(node, Nu):
            current = domain
            while True:
                following = ev(node.child, {**bound, node.variable: current})
                if following == current:
                    return current
                current = following
        raise TypeError(f"Unknown concept node {node!r}")

    return ev(concept, env)


def satisfies(interpretation: Interpretation, axiom: ConceptInclusion) -> bool:
    return extension_eval(interpretation, axiom.lhs) <= extension_eval(interpretation, axiom.rhs)


def is_model(interpretation: Interpretation, ontology: Ontology) -> bool:
    return all(satisfies(interpretation, axiom) for axiom in ontology)
