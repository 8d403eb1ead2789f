"""Type enumeration and type elimination.

A type is a Boolean-consistent assignment to the closure that respects every
axiom. Elimination deletes, round by round, every type with an existential
demand that no surviving type can serve as a successor for.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from pysat.solvers import Solver

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.reasoner.closure import ClosureIndex, Literal, TypeRecord
from src.syntax.concepts import (
    And, Bottom, Concept, Exists, Forall, Ontology, Or, Top, has_fixpoints,
)
from src.syntax.operations import closure_gamma

logger = logging.getLogger(__name__)

Requirement = Tuple[int, int]


@dataclass(frozen=True)
class EliminationResult:
    initial: FrozenSet[TypeRecord]
    rounds: Tuple[FrozenSet[TypeRecord], ...]

    @property
    def survivors(self) -> FrozenSet[TypeRecord]:
        return self.rounds[-1] if self.rounds else self.initial


class TypeSpace:
    """Types over one closure under one ontology."""

    def __init__(self, closure: ClosureIndex, ontology: Ontology):
        self.closure = closure
        self.ontology = ontology
        self.roles = sorted({concept.role for _, concept in closure.restrictions()})

    def _var(self, concept: Concept) -> int:
        bit, polarity = self.closure.literal(concept)
        return bit + 1 if polarity else -(bit + 1)

    def clauses(self) -> List[List[int]]:
        """Boolean consistency of every representative plus the axioms."""
        result: List[List[int]] = []
        for bit, concept in enumerate(self.closure.representatives):
            var = bit + 1
            if isinstance(concept, Top):
                result.append([var])
            elif isinstance(concept, Bottom):
                result.append([-var])
            elif isinstance(concept, And):
                children = [self._var(child) for child in concept.children]
                result.extend([-var, child] for child in children)
                result.append([var] + [-child for child in children])
            elif isinstance(concept, Or):
                children = [self._var(child) for child in concept.children]
                result.append([-var] + children)
                result.extend([var, -child] for child in children)
        for axiom in self.ontology:
            result.append([-self._var(axiom.lhs), self._var(axiom.rhs)])
        return result

    def enumerate(self) -> List[TypeRecord]:
        """All types, sorted by mask; at most ``Config.MAX_TYPES``."""
        size = len(self.closure)
        anchor = size + 1
        clauses = self.clauses() + [[anchor]] + [[anchor, bit + 1] for bit in range(size)]
        found: List[TypeRecord] = []
        with Solver(name=Config.SAT_SOLVER, bootstrap_with=clauses) as solver:
            while solver.solve():
                if len(found) >= Config.MAX_TYPES:
                    raise ResourceLimitError(f"more than {Config.MAX_TYPES} types over a closure of {size}")
                true = {lit for lit in solver.get_model() if lit > 0}
                mask = sum(1 << bit for bit in range(size) if bit + 1 in true)
                found.append(TypeRecord(mask, self.closure))
                if not size:
                    break
                solver.add_clause([-(bit + 1) if (mask >> bit) & 1 else bit + 1 for bit in range(size)])
        found.sort(key=lambda t: t.mask)
        logger.debug("Enumerated %d types over %d representatives", len(found), size)
        return found

    def requirement(self, record: TypeRecord, role: str) -> Requirement:
        """Masks ``(ones, zeros)`` every ``role``-successor of ``record`` must match."""
        ones = zeros = 0
        for bit, concept in self.closure.restrictions():
            if concept.role != role:
                continue
            holds = (record.mask >> bit) & 1
            if isinstance(concept, Forall) and holds:
                target, polarity = self.closure.literal(concept.child)
            elif isinstance(concept, Exists) and not holds:
                target, polarity = self.closure.literal(concept.child)
                polarity = not polarity
            else:
                continue
            if polarity:
                ones |= 1 << target
            else:
                zeros |= 1 << target
        return ones, zeros

    def demands(self, record: TypeRecord) -> List[Tuple[str, Literal]]:
        """``(role, literal)`` pairs that some successor must satisfy."""
        result = []
        for bit, concept in self.closure.restrictions():
            holds = (record.mask >> bit) & 1
            target, polarity = self.closure.literal(concept.child)
            if isinstance(concept, Exists) and holds:
                result.append((concept.role, (target, polarity)))
            elif isinstance(concept, Forall) and not holds:
                result.append((concept.role, (target, not polarity)))
        return result

    @staticmethod
    def matches(record: TypeRecord, requirement: Requirement, literal: Literal = None) -> bool:
        ones, zeros = requirement
        if (record.mask & ones) != ones or record.mask & zeros:
            return False
        return literal is None or record.has(literal)

    def viable(self, source: TypeRecord, role: str, target: TypeRecord) -> bool:
        return self.matches(target, self.requirement(source, role))

    def eliminate(self, candidates: Iterable[TypeRecord]) -> EliminationResult:
        initial = frozenset(candidates)
        requirements: Dict[Tuple[TypeRecord, str], Requirement] = {}
        demands: Dict[TypeRecord, List[Tuple[str, Literal]]] = {}
        for record in initial:
            demands[record] = self.demands(record)
            for role in self.roles:
                requirements[record, role] = self.requirement(record, role)
        current = initial
        rounds: List[FrozenSet[TypeRecord]] = []
        while True:
            bad = set()
            for record in current:
                for role, literal in demands[record]:
                    requirement = requirements[record, role]
                    if not any(self.matches(other, requirement, literal) for other in current):
                        bad.add(record)
                        break
            if not bad:
                break
            current = current - bad
            rounds.append(current)
        logger.debug("Type elimination: %d -> %d types in %d rounds", len(initial), len(current), len(rounds))
        return EliminationResult(initial, tuple(rounds))


def type_space(ontology: Ontology, extra: Sequence[Concept] = ()) -> TypeSpace:
    if ontology.has_fixpoints() or any(has_fixpoints(concept) for concept in extra):
        raise PreconditionError("type elimination needs fixpoint-free input")
    return TypeSpace(ClosureIndex(closure_gamma([ontology, *extra])), ontology)


def eliminate_types(ontology: Ontology, extra: Sequence[Concept] = ()) -> EliminationResult:
    """Plain elimination over all types; nominals are treated as ordinary names."""
    space = type_space(ontology, extra)
    return space.eliminate(space.enumerate())


def nominal_assignments(space: TypeSpace, candidates: Sequence[TypeRecord]) -> List[Dict[str, TypeRecord]]:
    """Consistent choices of one type per individual among ``candidates``."""
    individuals = sorted({name for _, name in space.closure.nominals()})
    if len(individuals) > Config.ALCO_MAX_INDIVIDUALS:
        raise ResourceLimitError(
            f"{len(individuals)} individuals exceed the configured cap of {Config.ALCO_MAX_INDIVIDUALS}"
        )
    options = [[t for t in candidates if name in t.nominal_names()] for name in individuals]
    assignments = []
    for choice in product(*options):
        assignment = dict(zip(individuals, choice))
        if all(assignment[other] == record for record in choice for other in record.nominal_names()):
            assignments.append(assignment)
            if len(assignments) > Config.MAX_MOSAIC_BRANCHES:
                raise ResourceLimitError("too many nominal type assignments")
    return assignments


def realizable_in(space: TypeSpace) -> FrozenSet[TypeRecord]:
    types = space.enumerate()
    if not space.closure.nominals():
        return space.eliminate(types).survivors
    relaxed = space.eliminate(types).survivors
    nominal_free = [t for t in types if not t.nominal_names()]
    result = set()
    for assignment in nominal_assignments(space, sorted(relaxed, key=lambda t: t.mask)):
        guessed = set(assignment.values())
        survivors = space.eliminate(nominal_free + sorted(guessed, key=lambda t: t.mask)).survivors
        if guessed <= survivors:
            result |= survivors
    return frozenset(result)


def realizable_types(ontology: Ontology, extra: Sequence[Concept] = ()) -> FrozenSet[TypeRecord]:
    """Types over the closure of ``ontology`` and ``extra`` realised in some model."""
    return realizable_in(type_space(ontology, extra))
