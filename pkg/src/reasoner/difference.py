"""Bounded logical difference between ontologies.

Candidates come from a fixed grammar: left sides are conjunctions of
signature concept names, right sides are clauses built from signature
literals, bot, and one-step restrictions over smaller clauses. An empty
difference means no witness was found at the bound, not inseparability.
"""

import logging
from itertools import combinations, islice
from typing import Iterator, List

from src.reasoner.entailment import entails, entails_ontology
from src.syntax.concepts import (
    BOTTOM, Concept, ConceptInclusion, ConceptName, Exists, Forall, Not, Ontology, Or, Signature,
    conjunction,
)
from src.syntax.operations import signature

logger = logging.getLogger(__name__)


def lhs_candidates(sigma: Signature) -> List[Concept]:
    names = sorted(sigma.concepts)
    result: List[Concept] = []
    for size in range(len(names) + 1):
        for chosen in combinations(names, size):
            result.append(conjunction(ConceptName(name) for name in chosen))
    return result


def rhs_candidates(sigma: Signature, depth: int, limit: int) -> Iterator[Concept]:
    """Clauses in layer order; each layer adds restrictions over the previous layer's clauses."""
    atoms: List[Concept] = []
    for name in sorted(sigma.concepts):
        atoms.extend([ConceptName(name), Not(ConceptName(name))])
    atoms.append(BOTTOM)
    previous_clauses: List[Concept] = []
    new_atoms = list(atoms)
    for layer in range(depth + 1):
        if layer:
            new_atoms = [restriction(role, clause)
                         for role in sorted(sigma.roles)
                         for restriction in (Exists, Forall)
                         for clause in previous_clauses]
            atoms = atoms + new_atoms
        layer_clauses: List[Concept] = []
        for atom in new_atoms:
            layer_clauses.append(atom)
            yield atom
        start = len(atoms) - len(new_atoms)
        for j in range(start, len(atoms)):
            for i in range(j):
                clause = Or((atoms[i], atoms[j]))
                if len(previous_clauses) + len(layer_clauses) < limit:
                    layer_clauses.append(clause)
                yield clause
        previous_clauses = (previous_clauses + layer_clauses)[:limit]


def candidate_inclusions(sigma: Signature, depth: int, budget: int) -> Iterator[ConceptInclusion]:
    lhs = lhs_candidates(sigma)
    pairs = (ConceptInclusion(left, right) for right in rhs_candidates(sigma, depth, budget) for left in lhs)
    return islice(pairs, budget)


def logical_diff_bounded(first: Ontology, second: Ontology, sigma: Signature, depth: int,
                         budget: int) -> List[ConceptInclusion]:
    """Signature inclusions entailed by ``first`` but not by ``second``, within the bound."""
    witnesses = []
    checked = 0
    for candidate in candidate_inclusions(sigma, depth, budget):
        checked += 1
        if entails(first, candidate) and not entails(second, candidate):
            witnesses.append(candidate)
    logger.debug("Logical difference: %d candidates, %d witnesses", checked, len(witnesses))
    return witnesses


def conservative_extension_bounded(smaller: Ontology, larger: Ontology, depth: int, budget: int) -> bool:
    if not set(smaller.axioms) <= set(larger.axioms):
        return False
    return not logical_diff_bounded(larger, smaller, signature(smaller), depth, budget)


def inseparable_bounded(first: Ontology, second: Ontology, sigma: Signature, depth: int, budget: int) -> bool:
    return (not logical_diff_bounded(first, second, sigma, depth, budget)
            and not logical_diff_bounded(second, first, sigma, depth, budget))


def is_uniform_interpolant_bounded(ontology: Ontology, candidate: Ontology, sigma: Signature, depth: int,
                                   budget: int) -> bool:
    """Signature, soundness and bounded completeness checks of a uniform interpolant candidate."""
    if not signature(candidate).issubset(sigma):
        return False
    if not entails_ontology(ontology, candidate):
        return False
    return not logical_diff_bounded(ontology, candidate, sigma, depth, budget)
