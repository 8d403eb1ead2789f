"""Tool for computing uniform interpolants of ALC ontologies."""

import logging

from src.forgetting.definers import Policy
from src.forgetting.interpolant import render_result, uniform_interpolant
from src.mcp_server.config import Config
from src.mcp_server.service.input_service import ontology_from_text, signature_from_names, tool_errors
from src.records import UniformInterpolantRecord

logger = logging.getLogger(__name__)

COMPUTE_UNIFORM_INTERPOLANT_DESCRIPTION = f"""
Compute the uniform interpolant of an ontology for the names to keep.

{Config.CONCEPT_SYNTAX}

Usage notes:
- `keep` is a comma separated list such as "A,B,r"; every other name is forgotten.
- `policy` decides what happens to cyclic results: "fixpoint" (greatest fixpoints nu X.C),
  "aux" (fresh auxiliary names, listed in the result) or "approx:K" (unfold K levels).
- The returned ontology is entailed by the input and mentions only kept or auxiliary names.
"""


def compute_uniform_interpolant(ontology: str, keep: str, policy: str = "fixpoint") -> UniformInterpolantRecord:
    parsed = ontology_from_text(ontology)
    sigma = signature_from_names(keep, parsed)
    logger.info("Running compute_uniform_interpolant for %s with policy %s", sorted(sigma.names), policy)
    with tool_errors("compute the uniform interpolant"):
        result = uniform_interpolant(parsed, sigma, Policy.parse(policy))
    return UniformInterpolantRecord(
        ontology=render_result(result),
        signature=list(sigma.sorted_names()),
        policy=str(result.policy),
        used_fixpoints=result.used_fixpoints,
        auxiliary_names=sorted(result.auxiliary_names),
    )


compute_uniform_interpolant.__doc__ = COMPUTE_UNIFORM_INTERPOLANT_DESCRIPTION
