"""Tool for deciding concept subsumption under an ontology."""

import logging

from src.mcp_server.service.input_service import concept_from_text, ontology_from_text, tool_errors
from src.reasoner.entailment import subsumes
from src.records import SubsumptionRecord
from src.syntax.render import render_concept

logger = logging.getLogger(__name__)


def check_subsumption(ontology: str, lhs: str, rhs: str) -> SubsumptionRecord:
    """
    Decides whether an ontology entails lhs [= rhs.

    Args:
        ontology: Ontology text, for example "A [= some r.B." (may be empty).
        lhs: Subsumee concept.
        rhs: Subsumer concept.

    Returns:
        SubsumptionRecord with both concepts in canonical syntax and the verdict.
    """
    parsed = ontology_from_text(ontology)
    left, right = concept_from_text(lhs, "lhs"), concept_from_text(rhs, "rhs")
    logger.info("Running check_subsumption on %d axioms", len(parsed))
    with tool_errors("decide the subsumption"):
        entailed = subsumes(parsed, left, right)
    return SubsumptionRecord(lhs=render_concept(left), rhs=render_concept(right), entailed=entailed)
