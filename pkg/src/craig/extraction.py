"""Interpolants read off an elimination trace, plus pruning and verification."""

import logging
from typing import Dict, Iterator, Tuple

from src.config import Config
from src.craig.mosaics import CauseKind, EliminationTrace, Mosaic
from src.exceptions import PreconditionError
from src.reasoner.entailment import subsumes
from src.syntax.concepts import (
    And, Concept, ConceptName, Exists, Forall, Not, Ontology, Or, Signature, conjunction, disjunction,
)
from src.syntax.operations import concept_size, signature
from src.syntax.simplify import simplify

logger = logging.getLogger(__name__)


class _Extractor:
    """Separating concepts per removed mosaic, built bottom-up and shared."""

    def __init__(self, trace: EliminationTrace):
        self.trace = trace
        self.memo: Dict[Mosaic, Concept] = {}

    def separator(self, mosaic: Mosaic) -> Concept:
        """A Σ-concept true in ``mosaic.first`` and false in ``mosaic.second``."""
        if mosaic in self.memo:
            return self.memo[mosaic]
        cause = self.trace.cause_of[mosaic]
        if cause.kind is CauseKind.ATOMIC:
            name = ConceptName(cause.name)
            result: Concept = name if name in mosaic.first else Not(name)
        else:
            successors = self.trace.successors
            level = self.trace.round_of[mosaic]
            role = cause.name
            if cause.side == 1:
                firsts = [t for t in successors(mosaic.first, role) if t.has(cause.literal)]
                seconds = successors(mosaic.second, role)
            else:
                firsts = successors(mosaic.first, role)
                seconds = [t for t in successors(mosaic.second, role) if t.has(cause.literal)]
            firsts = sorted(firsts, key=lambda t: t.mask)
            seconds = sorted(seconds, key=lambda t: t.mask)
            for a in firsts:
                for b in seconds:
                    if self.trace.round_of.get(Mosaic(a, b), level) >= level:
                        raise PreconditionError("elimination trace is not well founded")
            if cause.side == 1:
                body = disjunction(conjunction(self.separator(Mosaic(a, b)) for b in seconds) for a in firsts)
                result = Exists(role, body)
            else:
                body = conjunction(disjunction(self.separator(Mosaic(a, b)) for a in firsts) for b in seconds)
                result = Forall(role, body)
        result = simplify(result)
        self.memo[mosaic] = result
        return result


def interpolant_from_trace(trace: EliminationTrace, ontology: Ontology, c1: Concept, c2: Concept,
                           sigma: Signature) -> Concept:
    """Σ-concept ``I`` with ``c1 [= I`` and ``I [= not c2`` under ``ontology``.

    ``trace`` must be the elimination computed for ``ontology``, ``c1``, ``c2``
    and ``sigma``, and no surviving mosaic may pair the two concepts.
    """
    if trace.space.ontology != ontology or trace.sigma != sigma:
        raise PreconditionError("the elimination trace was computed for another ontology or signature")
    if any(c1 in mosaic.first and c2 in mosaic.second for mosaic in trace.survivors):
        raise PreconditionError("the concepts are jointly consistent; no interpolant can be extracted")
    extractor = _Extractor(trace)
    firsts = [t for t in trace.types if c1 in t]
    seconds = [t for t in trace.types if c2 in t]
    result = simplify(disjunction(conjunction(extractor.separator(Mosaic(a, b)) for b in seconds)
                                  for a in firsts))
    logger.debug("Extracted interpolant from %d separators", len(extractor.memo))
    return result


def _weakenings(concept: Concept) -> Iterator[Concept]:
    """Concepts with one And/Or child removed somewhere inside ``concept``."""
    if isinstance(concept, (And, Or)):
        rebuild = conjunction if isinstance(concept, And) else disjunction
        children = concept.children
        for i in range(len(children)):
            yield rebuild(children[:i] + children[i + 1:])
        for i, child in enumerate(children):
            for smaller in _weakenings(child):
                yield rebuild(children[:i] + (smaller,) + children[i + 1:])
    elif isinstance(concept, Not):
        for smaller in _weakenings(concept.child):
            yield Not(smaller)
    elif isinstance(concept, (Exists, Forall)):
        for smaller in _weakenings(concept.child):
            yield type(concept)(concept.role, smaller)


def prune_interpolant(ontology: Ontology, c1: Concept, c2: Concept, interpolant: Concept) -> Concept:
    """Greedily drop Boolean operands while ``c1 [= I [= c2`` still holds."""
    current = interpolant
    if concept_size(current) > Config.PRUNE_SIZE_LIMIT:
        return current
    improved = True
    while improved:
        improved = False
        for candidate in _weakenings(current):
            candidate = simplify(candidate)
            if concept_size(candidate) >= concept_size(current):
                continue
            if subsumes(ontology, c1, candidate) and subsumes(ontology, candidate, c2):
                current = candidate
                improved = True
                break
    return current


def verify_interpolant(ontology: Ontology, c1: Concept, c2: Concept, interpolant: Concept,
                       sigma: Signature) -> Tuple[bool, bool, bool]:
    """``(signature ok, ontology |= c1 [= I, ontology |= I [= c2)``."""
    used = signature(interpolant)
    return used.names <= sigma.names, subsumes(ontology, c1, interpolant), subsumes(ontology, interpolant, c2)


__all__ = ["interpolant_from_trace", "prune_interpolant", "verify_interpolant"]
