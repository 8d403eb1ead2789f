"""Mosaic elimination deciding joint consistency of two ALC concepts.

A mosaic pairs two realizable types, one per model, that a Σ-bisimulation
could relate. Round 0 removes pairs disagreeing on a Σ concept name; every
later round removes, all at once, pairs whose Σ-role demand has no surviving
successor pair. The trace keeps the round and one cause per removed pair.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.reasoner.closure import Literal, TypeRecord
from src.reasoner.types import TypeSpace, realizable_in, type_space
from src.syntax.concepts import Concept, ConceptName, Not, Ontology, Signature, has_nominals
from src.syntax.render import render_concept

logger = logging.getLogger(__name__)


class Mosaic(NamedTuple):
    first: TypeRecord
    second: TypeRecord


class CauseKind(str, Enum):
    ATOMIC = "atomic"
    EXISTENTIAL = "existential"


@dataclass(frozen=True)
class Cause:
    """Why a mosaic was removed.

    Atomic causes name the concept name the two types disagree on. Existential
    causes name the role, the side (1 or 2) whose type carries the unmet demand
    and the demanded successor literal.
    """

    kind: CauseKind
    name: str
    side: int = 0
    literal: Optional[Literal] = None


class SuccessorIndex:
    """Realizable ``role``-successors of each realizable type, computed once."""

    def __init__(self, space: TypeSpace, types: Tuple[TypeRecord, ...]):
        self.space = space
        self.types = types
        self._cache: Dict[Tuple[TypeRecord, str], FrozenSet[TypeRecord]] = {}

    def __call__(self, record: TypeRecord, role: str) -> FrozenSet[TypeRecord]:
        key = (record, role)
        if key not in self._cache:
            requirement = self.space.requirement(record, role)
            self._cache[key] = frozenset(t for t in self.types if self.space.matches(t, requirement))
        return self._cache[key]


@dataclass
class EliminationTrace:
    space: TypeSpace
    types: Tuple[TypeRecord, ...]
    sigma: Signature
    successors: SuccessorIndex
    round_of: Dict[Mosaic, int] = field(default_factory=dict)
    cause_of: Dict[Mosaic, Cause] = field(default_factory=dict)
    survivors: FrozenSet[Mosaic] = frozenset()

    @property
    def initial(self) -> int:
        return len(self.types) ** 2

    @property
    def rounds(self) -> int:
        """Index of the last round that removed something; -1 if none did."""
        return max(self.round_of.values(), default=-1)

    def witness_concept(self, literal: Literal) -> Concept:
        bit, polarity = literal
        concept = self.space.closure.representatives[bit]
        return concept if polarity else Not(concept)


def _atomic_cause(mosaic: Mosaic, names: List[Tuple[str, Literal]]) -> Optional[Cause]:
    for name, literal in names:
        if mosaic.first.has(literal) != mosaic.second.has(literal):
            return Cause(CauseKind.ATOMIC, name)
    return None


def _existential_cause(mosaic: Mosaic, trace: EliminationTrace, demands: list,
                       by_first: Dict[TypeRecord, set]) -> Optional[Cause]:
    for role, side, _, literal in demands:
        if side == 1:
            witnesses = [t for t in trace.successors(mosaic.first, role) if t.has(literal)]
            partners = trace.successors(mosaic.second, role)
        else:
            witnesses = trace.successors(mosaic.first, role)
            partners = [t for t in trace.successors(mosaic.second, role) if t.has(literal)]
        if not any(by_first.get(a, set()) & set(partners) for a in witnesses):
            return Cause(CauseKind.EXISTENTIAL, role, side, literal)
    return None


def _sided_demands(space: TypeSpace, record: TypeRecord, roles: FrozenSet[str], side: int,
                   trace: EliminationTrace) -> list:
    entries = [(role, side, render_concept(trace.witness_concept(literal)), literal)
               for role, literal in space.demands(record) if role in roles]
    return sorted(entries, key=lambda entry: entry[:3])


def joint_consistency_alc(ontology: Ontology, c1: Concept, c2: Concept,
                          sigma: Signature) -> Tuple[bool, EliminationTrace]:
    """Whether some Σ-bisimulation relates an instance of ``c1`` to one of ``c2``.

    Returns the verdict and the elimination trace. Mosaics range over pairs of
    types realizable under ``ontology`` over the closure of the three inputs.
    """
    if ontology.has_nominals() or has_nominals(c1) or has_nominals(c2):
        raise PreconditionError("ALC mosaic elimination does not handle nominals")
    space = type_space(ontology, [c1, c2])
    types = tuple(sorted(realizable_in(space), key=lambda t: t.mask))
    if len(types) ** 2 > Config.MAX_MOSAICS:
        raise ResourceLimitError(f"{len(types) ** 2} mosaics exceed the configured cap of {Config.MAX_MOSAICS}")
    trace = EliminationTrace(space, types, sigma, SuccessorIndex(space, types))
    closure = space.closure
    names = sorted((name, closure.literal(ConceptName(name))) for name in sigma.concepts
                   if ConceptName(name) in closure)

    current = set()
    for first in types:
        for second in types:
            mosaic = Mosaic(first, second)
            cause = _atomic_cause(mosaic, names)
            if cause is None:
                current.add(mosaic)
            else:
                trace.round_of[mosaic] = 0
                trace.cause_of[mosaic] = cause
    logger.debug("Mosaic round 0: %d of %d mosaics survive", len(current), trace.initial)

    demands = {}
    for record in types:
        demands[record] = {side: _sided_demands(space, record, sigma.roles, side, trace) for side in (1, 2)}
    level = 0
    while True:
        level += 1
        by_first: Dict[TypeRecord, set] = {}
        for mosaic in current:
            by_first.setdefault(mosaic.first, set()).add(mosaic.second)
        removed = {}
        for mosaic in current:
            wanted = sorted(demands[mosaic.first][1] + demands[mosaic.second][2], key=lambda entry: entry[:3])
            cause = _existential_cause(mosaic, trace, wanted, by_first)
            if cause is not None:
                removed[mosaic] = cause
        if not removed:
            break
        for mosaic, cause in removed.items():
            trace.round_of[mosaic] = level
            trace.cause_of[mosaic] = cause
        current -= removed.keys()
        logger.debug("Mosaic round %d: removed %d, %d left", level, len(removed), len(current))

    trace.survivors = frozenset(current)
    consistent = any(c1 in mosaic.first and c2 in mosaic.second for mosaic in current)
    return consistent, trace
