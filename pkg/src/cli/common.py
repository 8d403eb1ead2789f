"""Shared plumbing of the command line: the group class, input readers and result output."""

import logging
from pathlib import Path
from typing import Iterable, Optional

import click
from pydantic import BaseModel

from src.config import Config
from src.exceptions import ResourceLimitError, WorkbenchError
from src.lp.parser import parse_program
from src.lp.program import LPProgram
from src.syntax.concepts import EMPTY_ONTOLOGY, Ontology, Signature
from src.syntax.operations import signature
from src.syntax.parser import parse_names, parse_ontology

logger = logging.getLogger(__name__)

STRUCTURED = "structured"
TEXT = "text"


class WorkbenchGroup(click.Group):
    """Maps workbench errors to exit codes; diagnostics go to stderr."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ResourceLimitError as exc:
            logger.warning("Gave up: %s", exc)
            click.echo(f"resource limit: {exc}", err=True)
            ctx.exit(Config.EXIT_RESOURCE)
        except WorkbenchError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(Config.EXIT_USAGE)


def read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def read_ontology(path: Optional[str]) -> Ontology:
    if path is None:
        return EMPTY_ONTOLOGY
    return parse_ontology(read_text(path))


def read_program(path: str) -> LPProgram:
    return parse_program(read_text(path))


def sigma_option(text: Optional[str], *sources) -> Signature:
    """Signature from a comma separated list, kinds taken from ``sources``."""
    return Signature.classify(parse_names(text), signature(list(sources)))


def atoms_option(text: Optional[str]) -> frozenset:
    return frozenset(parse_names(text))


def emit(record: BaseModel, text: Iterable[str], positive: bool = True) -> None:
    """Print ``record`` in the selected mode and exit 0 for a positive, 1 for a negative answer."""
    ctx = click.get_current_context()
    mode = ctx.find_root().obj.get("mode", TEXT)
    if mode == STRUCTURED:
        click.echo(record.model_dump_json())
    else:
        for line in text:
            click.echo(line)
    ctx.exit(Config.EXIT_OK if positive else Config.EXIT_NEGATIVE)
