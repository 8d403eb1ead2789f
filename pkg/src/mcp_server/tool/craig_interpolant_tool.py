"""Tool for computing Craig and signature-restricted interpolants."""

import logging
from typing import Optional

from src.craig.interpolants import craig_or_sigma_interpolant
from src.mcp_server.config import Config
from src.mcp_server.service.input_service import (
    concept_from_text, ontology_from_text, signature_from_names, tool_errors,
)
from src.records import InterpolantReport

logger = logging.getLogger(__name__)

COMPUTE_CRAIG_INTERPOLANT_DESCRIPTION = f"""
Compute a concept I with ontology |= lhs [= I and ontology |= I [= rhs that only uses names of `sigma`.

{Config.CONCEPT_SYNTAX}

Usage notes:
- Leave `sigma` empty to use the names shared by the two sides (a Craig interpolant).
- `status` is "found", "none_exists" (no interpolant over sigma) or "not_entailed"
  (lhs [= rhs does not follow); only "found" carries an interpolant.
- Nominals and fixpoints are not supported here.
"""


def compute_craig_interpolant(ontology: str, lhs: str, rhs: str, sigma: Optional[str] = None) -> InterpolantReport:
    parsed = ontology_from_text(ontology)
    left, right = concept_from_text(lhs, "lhs"), concept_from_text(rhs, "rhs")
    chosen = signature_from_names(sigma, parsed, left, right) if sigma and sigma.strip() else None
    logger.info("Running compute_craig_interpolant with sigma=%s", sorted(chosen.names) if chosen else "shared")
    with tool_errors("compute the interpolant"):
        return craig_or_sigma_interpolant(parsed, parsed, left, right, chosen)


compute_craig_interpolant.__doc__ = COMPUTE_CRAIG_INTERPOLANT_DESCRIPTION
