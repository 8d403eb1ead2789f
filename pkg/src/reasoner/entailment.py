"""Subsumption, satisfiability, consistency and ontology entailment."""

import logging
from functools import lru_cache

from src.exceptions import PreconditionError
from src.reasoner.hintikka import HintikkaReasoner
from src.reasoner.types import realizable_types
from src.syntax.concepts import (
    And, Concept, ConceptInclusion, Not, Ontology, TOP, has_fixpoints, has_nominals,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def reasoner_for(ontology: Ontology) -> HintikkaReasoner:
    return HintikkaReasoner(ontology)


def _require_fixpoint_free(ontology: Ontology, *concepts: Concept) -> None:
    if ontology.has_fixpoints() or any(has_fixpoints(concept) for concept in concepts):
        raise PreconditionError("reasoning needs fixpoint-free input; unroll fixpoints first")


def is_satisfiable(ontology: Ontology, concept: Concept) -> bool:
    """Whether some model of ``ontology`` has an instance of ``concept``."""
    _require_fixpoint_free(ontology, concept)
    if ontology.has_nominals() or has_nominals(concept):
        return any(concept in record for record in realizable_types(ontology, [concept]))
    return reasoner_for(ontology).satisfiable([concept])


def is_consistent(ontology: Ontology) -> bool:
    return is_satisfiable(ontology, TOP)


def entails(ontology: Ontology, axiom: ConceptInclusion) -> bool:
    """``ontology |= lhs [= rhs``; inconsistent ontologies entail everything."""
    return not is_satisfiable(ontology, And((axiom.lhs, Not(axiom.rhs))))


def entails_ontology(ontology: Ontology, other: Ontology) -> bool:
    return all(entails(ontology, axiom) for axiom in other)


def equivalent(first: Ontology, second: Ontology) -> bool:
    return entails_ontology(first, second) and entails_ontology(second, first)


def subsumes(ontology: Ontology, lhs: Concept, rhs: Concept) -> bool:
    return entails(ontology, ConceptInclusion(lhs, rhs))


def equivalent_concepts(ontology: Ontology, first: Concept, second: Concept) -> bool:
    return subsumes(ontology, first, second) and subsumes(ontology, second, first)
