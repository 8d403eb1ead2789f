"""Parsing helpers for tool inputs.

Workbench errors are re-raised as ``ValueError`` with an agent-friendly
message so the MCP client sees what to fix.
"""

from contextlib import contextmanager
from typing import Iterator, Optional

from src.exceptions import WorkbenchError
from src.lp.parser import parse_program
from src.lp.program import LPProgram
from src.syntax.concepts import Concept, Ontology, Signature
from src.syntax.operations import signature
from src.syntax.parser import parse_concept, parse_names, parse_ontology


@contextmanager
def tool_errors(action: str) -> Iterator[None]:
    """Turn workbench errors raised while performing ``action`` into ``ValueError``."""
    try:
        yield
    except WorkbenchError as e:
        raise ValueError(f"Failed to {action}: {e}") from e


def ontology_from_text(text: Optional[str]) -> Ontology:
    with tool_errors("parse the ontology"):
        return parse_ontology(text or "")


def concept_from_text(text: str, label: str) -> Concept:
    if not text or not text.strip():
        raise ValueError(f"{label} must be a non-empty concept such as 'some r.A'.")
    with tool_errors(f"parse {label}"):
        return parse_concept(text)


def signature_from_names(names: Optional[str], *sources) -> Signature:
    with tool_errors("parse the signature"):
        return Signature.classify(parse_names(names), signature(list(sources)))


def program_from_text(text: str) -> LPProgram:
    with tool_errors("parse the program"):
        return parse_program(text)
