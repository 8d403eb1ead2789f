"""Seeded random ontologies, concepts and programs for fuzz suites."""

import random
from typing import Sequence

from src.lp.program import LPProgram, LPRule
from src.syntax.concepts import (
    And, BOTTOM, Concept, ConceptInclusion, ConceptName, Exists, Forall, Not, Ontology, Or, TOP,
)

DEFAULT_CONCEPTS = ("A", "B", "C", "D")
DEFAULT_ROLES = ("r", "s")
DEFAULT_ATOMS = ("a", "b", "c", "d")


def random_concept(rng: random.Random, depth: int = 2, concepts: Sequence[str] = DEFAULT_CONCEPTS,
                   roles: Sequence[str] = DEFAULT_ROLES) -> Concept:
    """Closed, fixpoint-free concept with role depth at most ``depth``."""
    if depth <= 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.05:
            return TOP
        if roll < 0.08:
            return BOTTOM
        atom = ConceptName(rng.choice(concepts))
        return Not(atom) if rng.random() < 0.3 else atom
    kind = rng.choice(("not", "and", "or", "some", "all"))
    if kind == "not":
        return Not(random_concept(rng, depth - 1, concepts, roles))
    if kind in ("and", "or"):
        children = tuple(random_concept(rng, depth - 1, concepts, roles) for _ in range(2))
        return And(children) if kind == "and" else Or(children)
    child = random_concept(rng, depth - 1, concepts, roles)
    role = rng.choice(roles) if roles else None
    if role is None:
        return child
    return Exists(role, child) if kind == "some" else Forall(role, child)


def random_ontology(rng: random.Random, axioms: int = 3, depth: int = 2,
                    concepts: Sequence[str] = DEFAULT_CONCEPTS, roles: Sequence[str] = DEFAULT_ROLES) -> Ontology:
    return Ontology(tuple(
        ConceptInclusion(random_concept(rng, depth, concepts, roles), random_concept(rng, depth, concepts, roles))
        for _ in range(axioms)
    ))


def random_program(rng: random.Random, rules: int = 3, atoms: Sequence[str] = DEFAULT_ATOMS,
                   max_body: int = 2, disjunction: float = 0.15) -> LPProgram:
    """Rules with one head atom, occasionally two or none, and up to ``max_body`` body literals."""
    generated = []
    for _ in range(rules):
        roll = rng.random()
        heads = 0 if roll < 0.1 else 2 if roll < 0.1 + disjunction else 1
        head = frozenset(rng.sample(list(atoms), min(heads, len(atoms))))
        pbody, nbody, nnbody = set(), set(), set()
        for _ in range(rng.randint(0, max_body)):
            atom = rng.choice(atoms)
            kind = rng.random()
            (pbody if kind < 0.45 else nbody if kind < 0.85 else nnbody).add(atom)
        generated.append(LPRule(head, frozenset(pbody), frozenset(nbody), frozenset(nnbody)))
    return LPProgram(tuple(generated))
