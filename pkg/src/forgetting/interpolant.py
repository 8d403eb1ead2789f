"""Uniform interpolants of ALC ontologies: clausify, forget, eliminate definers, verify."""

import logging
from typing import Iterable, Optional

from src.config import Config
from src.exceptions import PreconditionError, VerificationError
from src.forgetting.clausify import clausify
from src.forgetting.definers import FIXPOINT, Policy, PolicyKind, UIResult, definer_elimination
from src.forgetting.saturation import eliminate_symbols
from src.reasoner.entailment import entails_ontology, is_consistent
from src.syntax.concepts import BOTTOM, ConceptInclusion, Ontology, Signature, TOP
from src.syntax.operations import map_ontology, signature, unroll
from src.syntax.render import render_ontology

logger = logging.getLogger(__name__)


def _verify(ontology: Ontology, result: UIResult, sigma: Signature) -> None:
    allowed = sigma.names | result.auxiliary_names
    stray = signature(result.ontology).names - allowed
    if stray:
        raise VerificationError(f"interpolant mentions names outside the signature: {sorted(stray)}")
    checked = Ontology(tuple(axiom for axiom in result.ontology
                             if not signature(axiom).names & result.auxiliary_names))
    if result.used_fixpoints:
        checked = map_ontology(checked, lambda concept: unroll(concept, Config.UNROLL_VERIFY_DEPTH))
    if not entails_ontology(ontology, checked):
        raise VerificationError("interpolant is not entailed by the input ontology")
    logger.debug("Verified %d interpolant axioms", len(checked))


def uniform_interpolant(ontology: Ontology, sigma: Signature, policy: Policy = FIXPOINT,
                        limit: Optional[int] = None) -> UIResult:
    """Uniform interpolant of ``ontology`` for ``sigma`` under the given cycle policy.

    The result is entailed by ``ontology`` and uses only names of ``sigma``
    plus, under the aux policy, the listed auxiliary names.
    """
    if ontology.has_fixpoints():
        raise PreconditionError("uniform interpolation needs a fixpoint-free ontology")
    if ontology.has_nominals():
        raise PreconditionError("uniform interpolation is defined for ALC; nominals are not supported")
    if not is_consistent(ontology):
        logger.debug("Input ontology is inconsistent")
        return UIResult(Ontology((ConceptInclusion(TOP, BOTTOM),)), False, frozenset(), policy)
    source = signature(ontology)
    forget = (source - sigma).names
    if not forget:
        return UIResult(ontology, False, frozenset(), policy)
    clauses, context = clausify(ontology, reserved=sigma.names)
    clauses, context = eliminate_symbols(clauses, context, forget, limit)
    result = definer_elimination(clauses, context, policy)
    logger.debug("Forgot %s: %d clauses, %d definers created, %d reused",
                 sorted(forget), len(clauses), len(context.definers), context.reuse_hits)
    _verify(ontology, result, sigma)
    return result


def forget(ontology: Ontology, names: Iterable[str], policy: Policy = FIXPOINT,
           limit: Optional[int] = None) -> UIResult:
    """Uniform interpolant for the signature of ``ontology`` without ``names``."""
    return uniform_interpolant(ontology, signature(ontology).without(names), policy, limit)


def render_result(result: UIResult) -> str:
    return render_ontology(result.ontology, header=result.header())


__all__ = ["Policy", "PolicyKind", "UIResult", "forget", "render_result", "uniform_interpolant"]
