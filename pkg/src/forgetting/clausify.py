"""Normal form: CNF over literals with definers standing in for restriction fillers."""

import logging
from typing import FrozenSet, Iterable, List, Set, Tuple

from src.exceptions import PreconditionError
from src.forgetting.clauses import DefinerContext, DLClause, Literal
from src.syntax.concepts import (
    And, Bottom, Concept, ConceptName, Exists, Forall, Nominal, Not, Ontology, Or, Top, canonical_key, implies,
)
from src.syntax.operations import nnf, signature
from src.syntax.render import render_concept

logger = logging.getLogger(__name__)

Cnf = List[FrozenSet[Literal]]


class _Clausifier:
    def __init__(self, context: DefinerContext):
        self.context = context
        self.clauses: List[DLClause] = []

    def definer_for(self, filler: Concept) -> str:
        definer, created = self.context.for_filler(canonical_key(filler), render_concept(filler))
        if created:
            for literals in self.cnf(filler):
                self.emit(literals | {Literal.neg(definer)})
        return definer

    def emit(self, literals: FrozenSet[Literal]) -> None:
        clause = DLClause(literals)
        if not clause.is_tautology():
            self.clauses.append(clause)

    def cnf(self, concept: Concept) -> Cnf:
        if isinstance(concept, Top):
            return []
        if isinstance(concept, Bottom):
            return [frozenset()]
        if isinstance(concept, ConceptName):
            return [frozenset({Literal.pos(concept.name)})]
        if isinstance(concept, Not) and isinstance(concept.child, ConceptName):
            return [frozenset({Literal.neg(concept.child.name)})]
        if isinstance(concept, And):
            result: Cnf = []
            for child in concept.children:
                result.extend(self.cnf(child))
            return result
        if isinstance(concept, Or):
            result = [frozenset()]
            for child in concept.children:
                child_cnf = self.cnf(child)
                result = [left | right for left in result for right in child_cnf]
            return result
        if isinstance(concept, Exists):
            if isinstance(concept.child, Bottom):
                return [frozenset()]
            return [frozenset({Literal.exists(concept.role, self.definer_for(concept.child))})]
        if isinstance(concept, Forall):
            if isinstance(concept.child, Top):
                return []
            return [frozenset({Literal.forall(concept.role, self.definer_for(concept.child))})]
        if isinstance(concept, Nominal):
            raise PreconditionError("clausification is defined for ALC; nominals are not supported")
        raise PreconditionError(f"cannot clausify {render_concept(concept)}")


def clausify(ontology: Ontology, reserved: Iterable[str] = (),
             context: DefinerContext = None) -> Tuple[Set[DLClause], DefinerContext]:
    """Clause set and definer context for a fixpoint-free ALC ontology.

    Each axiom ``C [= D`` becomes the CNF of ``nnf(not C or D)``; every
    restriction filler is named by a definer ``X`` with clauses for
    ``X [= filler``. Identical fillers share a definer.
    """
    if ontology.has_fixpoints():
        raise PreconditionError("clausification needs a fixpoint-free ontology")
    if context is None:
        context = DefinerContext(set(signature(ontology).names) | set(reserved))
    clausifier = _Clausifier(context)
    for axiom in ontology:
        for literals in clausifier.cnf(nnf(implies(axiom.lhs, axiom.rhs))):
            clausifier.emit(literals)
    clauses = set(clausifier.clauses)
    logger.debug("Clausified %d axioms into %d clauses with %d definers",
                 len(ontology), len(clauses), len(context.definers))
    return clauses, context
