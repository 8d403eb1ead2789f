"""Propositional encoding of "a concept holds at an element" over a fixed finite domain."""

from typing import Dict, List, Tuple

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool

from src.semantics.interpretation import Interpretation
from src.syntax.concepts import (
    And, Bottom, Concept, ConceptName, Exists, Forall, Nominal, Not, Or, Signature, Top,
)
from src.syntax.operations import nnf


class ModelEncoder:
    """Clauses describing one interpretation with domain ``0..size-1``.

    ``holds`` returns a literal that implies the concept at an element;
    implications run one way, which is enough for concepts required to hold.
    """

    def __init__(self, pool: IDPool, tag: str, size: int, sig: Signature):
        self.pool = pool
        self.tag = tag
        self.size = size
        self.sig = sig
        self.clauses: List[List[int]] = []
        self._memo: Dict[Tuple[Concept, int], int] = {}
        self._aux_count = 0
        self._true = pool.id((tag, "true"))
        self.clauses.append([self._true])
        for individual in sorted(sig.individuals):
            lits = [self.individual(individual, e) for e in range(size)]
            card = CardEnc.equals(lits=lits, bound=1, vpool=pool, encoding=EncType.pairwise)
            self.clauses.extend(card.clauses)

    def concept(self, name: str, element: int) -> int:
        return self.pool.id((self.tag, "c", name, element))

    def role(self, name: str, source: int, target: int) -> int:
        return self.pool.id((self.tag, "r", name, source, target))

    def individual(self, name: str, element: int) -> int:
        return self.pool.id((self.tag, "i", name, element))

    def ordered_variables(self) -> List[int]:
        """Concept, then role, then individual variables in name and element order."""
        ordered = [self.concept(n, e) for n in sorted(self.sig.concepts) for e in range(self.size)]
        ordered += [self.role(r, a, b) for r in sorted(self.sig.roles)
                    for a in range(self.size) for b in range(self.size)]
        ordered += [self.individual(n, e) for n in sorted(self.sig.individuals) for e in range(self.size)]
        return ordered

    def register_all(self) -> None:
        """Mention every signature variable so the solver assigns it."""
        self.clauses.extend([self._true, var] for var in self.ordered_variables())

    def require(self, concept: Concept, element: int) -> None:
        self.clauses.append([self.holds(nnf(concept), element)])

    def require_everywhere(self, concept: Concept) -> None:
        normal = nnf(concept)
        for element in range(self.size):
            self.clauses.append([self.holds(normal, element)])

    def holds(self, concept: Concept, element: int) -> int:
        key = (concept, element)
        if key not in self._memo:
            self._memo[key] = self._encode(concept, element)
        return self._memo[key]

    def _aux(self) -> int:
        self._aux_count += 1
        return self.pool.id((self.tag, "aux", self._aux_count))

    def _encode(self, concept: Concept, element: int) -> int:
        if isinstance(concept, Top):
            return self._true
        if isinstance(concept, Bottom):
            return -self._true
        if isinstance(concept, ConceptName):
            return self.concept(concept.name, element)
        if isinstance(concept, Nominal):
            return self.individual(concept.individual, element)
        if isinstance(concept, Not):
            return -self._encode(concept.child, element)
        var = self._aux()
        if isinstance(concept, And):
            for child in concept.children:
                self.clauses.append([-var, self.holds(child, element)])
        elif isinstance(concept, Or):
            self.clauses.append([-var] + [self.holds(child, element) for child in concept.children])
        elif isinstance(concept, Exists):
            choices = []
            for target in range(self.size):
                choice = self._aux()
                self.clauses.append([-choice, self.role(concept.role, element, target)])
                self.clauses.append([-choice, self.holds(concept.child, target)])
                choices.append(choice)
            self.clauses.append([-var] + choices)
        elif isinstance(concept, Forall):
            for target in range(self.size):
                self.clauses.append([-var, -self.role(concept.role, element, target),
                                     self.holds(concept.child, target)])
        else:
            raise TypeError(f"Cannot encode concept node {concept!r}")
        return var

    def decode(self, model: List[int]) -> Interpretation:
        true = {lit for lit in model if lit > 0}
        concepts = {name: frozenset(e for e in range(self.size) if self.concept(name, e) in true)
                    for name in self.sig.concepts}
        roles = {name: frozenset((a, b) for a in range(self.size) for b in range(self.size)
                                 if self.role(name, a, b) in true)
                 for name in self.sig.roles}
        individuals = {}
        for name in self.sig.individuals:
            for e in range(self.size):
                if self.individual(name, e) in true:
                    individuals[name] = e
                    break
        return Interpretation(self.size, concepts, roles, individuals)
