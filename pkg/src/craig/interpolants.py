"""Craig and Σ-interpolants, explicit definitions and the ontology-free reduction."""

import logging
from typing import Dict, Iterable, Optional, Tuple

from src.craig.extraction import interpolant_from_trace, prune_interpolant, verify_interpolant
from src.craig.mosaics import EliminationTrace, joint_consistency_alc
from src.exceptions import PreconditionError, VerificationError
from src.reasoner.entailment import subsumes
from src.records import InterpolantReport, InterpolantStatus, Verification
from src.syntax.concepts import (
    And, Concept, Forall, Not, Ontology, Signature, TOP, conjunction, has_fixpoints, implies,
)
from src.syntax.operations import fresh_name, map_ontology, rename_symbols, signature
from src.syntax.render import render_concept

logger = logging.getLogger(__name__)


def _require_fixpoint_free(ontology: Ontology, *concepts: Concept) -> None:
    if ontology.has_fixpoints() or any(has_fixpoints(concept) for concept in concepts):
        raise PreconditionError("interpolation needs fixpoint-free input")


def _renaming(keep: Signature, sources: Iterable, taken: Iterable[str]) -> Dict[str, str]:
    """Fresh ``name_r`` for every name of ``sources`` outside ``keep``."""
    used = set(taken)
    mapping = {}
    for name in sorted(signature(list(sources)).names - keep.names):
        new = fresh_name(name, used, "r")
        used.add(new)
        mapping[name] = new
    return mapping


def _report(status: InterpolantStatus, sigma: Signature, trace: Optional[EliminationTrace] = None,
            interpolant: Optional[Concept] = None,
            verification: Optional[Tuple[bool, bool, bool]] = None) -> InterpolantReport:
    checks = None
    if verification is not None:
        checks = Verification(signature_ok=verification[0], left_entailment=verification[1],
                              right_entailment=verification[2])
    return InterpolantReport(
        status=status,
        interpolant=render_concept(interpolant) if interpolant is not None else None,
        signature=sorted(sigma.names),
        verification=checks,
        rounds=trace.rounds + 1 if trace is not None else 0,
        mosaics=trace.initial if trace is not None else 0,
        survivors=len(trace.survivors) if trace is not None else 0,
    )


def _interpolate(ontology: Ontology, c1: Concept, c2: Concept, sigma: Signature, rename: bool,
                 prune: bool) -> Tuple[Optional[Concept], EliminationTrace]:
    """Interpolant of ``c1 [= c2`` under ``ontology`` over ``sigma``, or None.

    With ``rename`` the right-hand side and a copy of the ontology have every
    name outside ``sigma`` renamed apart first.
    """
    work, right = ontology, c2
    if rename:
        mapping = _renaming(sigma, [ontology, c2], signature([ontology, c1, c2]).names)
        renamed = map_ontology(ontology, lambda concept: rename_symbols(concept, mapping))
        work, right = ontology.union(renamed), rename_symbols(c2, mapping)
        logger.debug("Renamed %d names outside the signature", len(mapping))
    consistent, trace = joint_consistency_alc(work, c1, Not(right), sigma)
    if consistent:
        return None, trace
    interpolant = interpolant_from_trace(trace, work, c1, Not(right), sigma)
    if prune:
        interpolant = prune_interpolant(ontology, c1, c2, interpolant)
    return interpolant, trace


def _checked(ontology: Ontology, c1: Concept, c2: Concept, interpolant: Concept,
             sigma: Signature) -> Tuple[bool, bool, bool]:
    verification = verify_interpolant(ontology, c1, c2, interpolant, sigma)
    if not all(verification):
        raise VerificationError(f"interpolant {render_concept(interpolant)} failed verification: {verification}")
    return verification


def craig_or_sigma_interpolant(first: Ontology, second: Ontology, c1: Concept, c2: Concept,
                               sigma: Optional[Signature] = None, prune: bool = True) -> InterpolantReport:
    """Interpolant of ``c1 [= c2`` under the union of both ontologies.

    Without ``sigma`` the signature is the common signature of
    ``(first, c1)`` and ``(second, c2)`` and an interpolant always exists
    when the inclusion is entailed. With ``sigma`` the answer may be that
    none exists.
    """
    ontology = first.union(second)
    _require_fixpoint_free(ontology, c1, c2)
    rename = sigma is not None
    if sigma is None:
        sigma = signature([first, c1]) & signature([second, c2])
    if not subsumes(ontology, c1, c2):
        return _report(InterpolantStatus.NOT_ENTAILED, sigma)
    interpolant, trace = _interpolate(ontology, c1, c2, sigma, rename, prune)
    if interpolant is None:
        return _report(InterpolantStatus.NONE_EXISTS, sigma, trace)
    verification = _checked(ontology, c1, c2, interpolant, sigma)
    logger.debug("Interpolant %s after %d rounds", render_concept(interpolant), trace.rounds + 1)
    return _report(InterpolantStatus.FOUND, sigma, trace, interpolant, verification)


def explicit_definition(ontology: Ontology, context: Concept, target: Concept, sigma: Signature,
                        prune: bool = True) -> InterpolantReport:
    """Σ-concept ``D`` with ``ontology |= context [= (target <-> D)``, if one exists.

    ``target`` is defined implicitly when every two models of ``ontology``
    agreeing on ``sigma`` agree on ``target`` within ``context``; in ALC that
    is the case exactly when an explicit definition exists.
    """
    _require_fixpoint_free(ontology, context, target)
    if not sigma.issubset(signature([ontology, context])):
        logger.warning("Signature %s is not part of the ontology and context", sorted(sigma.names))
    lhs, rhs = And((context, target)), implies(context, target)
    if signature(target).names <= sigma.names:
        return _report(InterpolantStatus.FOUND, sigma, interpolant=target,
                       verification=_checked(ontology, lhs, rhs, target, sigma))
    mapping = _renaming(sigma, [ontology, context, target], signature([ontology, context, target]).names)
    renamed = map_ontology(ontology, lambda concept: rename_symbols(concept, mapping))
    if not subsumes(ontology.union(renamed), lhs, rename_symbols(rhs, mapping)):
        logger.debug("Target is not implicitly definable")
        return _report(InterpolantStatus.NOT_DEFINABLE, sigma)
    definition, trace = _interpolate(ontology, lhs, rhs, sigma, True, prune)
    if definition is None:
        return _report(InterpolantStatus.NOT_DEFINABLE, sigma, trace)
    verification = _checked(ontology, lhs, rhs, definition, sigma)
    return _report(InterpolantStatus.FOUND, sigma, trace, definition, verification)


def phi_depth(ontology: Ontology, depth: int, roles: Optional[Iterable[str]] = None) -> Concept:
    """The axioms of ``ontology`` as a concept, enforced along every role path up to ``depth``.

    Roles default to those of ``ontology``. Each level reuses the concept
    object of the level below, so the result is a DAG of linear size.
    """
    if depth < 0:
        raise PreconditionError("depth must be nonnegative")
    if ontology.has_fixpoints():
        raise PreconditionError("the ontology must be fixpoint-free")
    local = conjunction(implies(axiom.lhs, axiom.rhs) for axiom in ontology)
    if local == TOP:
        return TOP
    roles = sorted(signature(ontology).roles if roles is None else set(roles))
    level = local
    for _ in range(depth):
        level = conjunction([local] + [Forall(role, level) for role in roles])
    return level


def ontology_free_reduction(ontology: Ontology, c1: Concept, c2: Concept, depth: int) -> Tuple[Concept, Concept]:
    """``(phi and c1, phi -> c2)`` with the axioms internalised up to ``depth``."""
    phi = phi_depth(ontology, depth, signature([ontology, c1, c2]).roles)
    return And((phi, c1)), implies(phi, c2)
