"""Answer-set program subcommands."""

from typing import Optional

import click

from src.cli.common import atoms_option, emit, read_program
from src.lp.forgetting import check_forgetting_properties, forgetting_report, is_uniform_interpolant
from src.lp.semantics import Relation, answer_sets, ht_models, universe_of
from src.records import AnswerSetsRecord, HTModelsRecord, UniformCheckRecord

PROGRAM_FILE = click.Path(exists=True, dir_okay=False)


def _braces(atoms) -> str:
    return "{" + ", ".join(sorted(atoms)) + "}"


@click.group("lp")
def lp():
    """Propositional answer-set programs."""


@lp.command("as")
@click.argument("program_path", type=PROGRAM_FILE)
def lp_answer_sets(program_path: str):
    """Answer sets of a program; exit 1 when there are none."""
    found = sorted(sorted(model) for model in answer_sets(read_program(program_path)))
    record = AnswerSetsRecord(answer_sets=found)
    emit(record, [_braces(model) for model in found] or ["incoherent"], record.coherent)


@lp.command("ht")
@click.argument("program_path", type=PROGRAM_FILE)
@click.option("--universe", default=None, help="Comma separated atoms; defaults to the program's atoms.")
def lp_ht_models(program_path: str, universe: Optional[str]):
    """HT-models of a program as <here, there> pairs."""
    program = read_program(program_path)
    atoms = universe_of(atoms_option(universe) | program.atoms if universe else None, program)
    pairs = sorted(((sorted(pair.here), sorted(pair.there)) for pair in ht_models(program, atoms)),
                   key=lambda pair: (len(pair[1]), pair[1], len(pair[0]), pair[0]))
    record = HTModelsRecord(universe=sorted(atoms), pairs=pairs)
    emit(record, [f"<{_braces(here)}, {_braces(there)}>" for here, there in pairs], bool(pairs))


@lp.command("forget")
@click.argument("program_path", type=PROGRAM_FILE)
@click.option("--forget", "forgotten", required=True, help="Comma separated atoms to forget.")
def lp_forget(program_path: str, forgotten: str):
    """Forget atoms by HT-projection and report the forgetting properties of the result."""
    report = forgetting_report(read_program(program_path), atoms_option(forgotten))
    lines = report.program.rstrip("\n").splitlines() or ["% empty program"]
    lines += [f"% {name}: {'yes' if holds else 'no'}" for name, holds in report.properties.items()]
    emit(report, lines)


@lp.command("check")
@click.argument("program_path", type=PROGRAM_FILE)
@click.option("--candidate", "candidate_path", type=PROGRAM_FILE, required=True, help="Candidate program.")
@click.option("--keep", required=True, help="Comma separated atoms the candidate may use.")
@click.option("--relation", type=click.Choice([relation.value for relation in Relation]), default=None,
              help="Only check this relation; both by default.")
def lp_check(program_path: str, candidate_path: str, keep: str, relation: Optional[str]):
    """Whether the candidate is a uniform interpolant of the program for the kept atoms."""
    program, candidate = read_program(program_path), read_program(candidate_path)
    kept = atoms_option(keep)
    relations = [Relation(relation)] if relation else list(Relation)
    uniform = {chosen.value: is_uniform_interpolant(program, kept, candidate, chosen) for chosen in relations}
    properties = {}
    if candidate.atoms <= kept & program.atoms:
        properties = check_forgetting_properties(program, program.atoms - kept, candidate)
    record = UniformCheckRecord(keep=sorted(kept), uniform=uniform, properties=properties)
    lines = [f"uniform ({name}): {'yes' if holds else 'no'}" for name, holds in uniform.items()]
    lines += [f"{name}: {'yes' if holds else 'no'}" for name, holds in properties.items()]
    emit(record, lines, all(uniform.values()))
