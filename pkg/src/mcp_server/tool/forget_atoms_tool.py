"""Tool for forgetting atoms from answer-set programs."""

import logging

from src.lp.forgetting import forgetting_report
from src.mcp_server.config import Config
from src.mcp_server.service.input_service import program_from_text, tool_errors
from src.records import ForgettingReport
from src.syntax.parser import parse_names

logger = logging.getLogger(__name__)

FORGET_ATOMS_DESCRIPTION = f"""
Forget atoms from a propositional program, preserving its HT-models on the remaining atoms.

{Config.PROGRAM_SYNTAX}

Usage notes:
- `forget` is a comma separated list of atoms occurring in the program.
- `properties` reports CP (answer sets preserved), W (weakening), PP (positive persistence,
  checked on short rules) and SP (strong persistence for added facts).
"""


def forget_atoms(program: str, forget: str) -> ForgettingReport:
    parsed = program_from_text(program)
    with tool_errors("read the atoms to forget"):
        atoms = frozenset(parse_names(forget))
    logger.info("Running forget_atoms for %s", sorted(atoms))
    with tool_errors("forget the atoms"):
        return forgetting_report(parsed, atoms)


forget_atoms.__doc__ = FORGET_ATOMS_DESCRIPTION
