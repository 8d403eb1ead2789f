"""Description logic subcommands: reasoning, uniform and Craig interpolation, model checks."""

from pathlib import Path
from typing import Optional

import click

from src.cli.common import emit, read_ontology, read_program, read_text, sigma_option
from src.config import Config
from src.craig.interpolants import craig_or_sigma_interpolant, explicit_definition
from src.craig.nominals import interpolant_exists_alco
from src.exceptions import PreconditionError
from src.forgetting.definers import Policy
from src.forgetting.interpolant import render_result, uniform_interpolant
from src.reasoner.difference import logical_diff_bounded
from src.reasoner.entailment import equivalent, subsumes
from src.records import (
    CheckRecord, CountermodelRecord, DifferenceRecord, EquivalenceRecord, ExistenceRecord, InterpolantReport,
    InterpolantStatus, ModelCheckRecord, SubsumptionRecord, UniformInterpolantRecord,
)
from src.semantics.countermodel import bounded_countermodel
from src.semantics.evaluation import satisfies
from src.semantics.interpretation import parse_interpretation, render_interpretation
from src.syntax.operations import signature
from src.syntax.parser import parse_concept
from src.syntax.render import render_concept, render_inclusion

EXISTING_FILE = click.Path(exists=True, dir_okay=False)


def _report_lines(report: InterpolantReport):
    if report.status is InterpolantStatus.FOUND:
        return [report.interpolant]
    return [report.status.value]


@click.command("check")
@click.argument("path", type=EXISTING_FILE)
def check(path: str):
    """Parse and validate an ontology (.dl), program (.lp) or interpretation (.int)."""
    suffix = Path(path).suffix
    if suffix == ".lp":
        program = read_program(path)
        record = CheckRecord(path=path, kind="program", items=len(program), signature=sorted(program.atoms))
    elif suffix == ".int":
        interpretation = parse_interpretation(read_text(path))
        names = set(interpretation.concepts) | set(interpretation.roles) | set(interpretation.individuals)
        record = CheckRecord(path=path, kind="interpretation", items=interpretation.size, signature=sorted(names))
    else:
        ontology = read_ontology(path)
        record = CheckRecord(path=path, kind="ontology", items=len(ontology),
                             signature=list(signature(ontology).sorted_names()))
    emit(record, [f"{path}: {record.kind} with {record.items} items over {len(record.signature)} names"])


@click.command("subsume")
@click.argument("ontology_path", type=EXISTING_FILE)
@click.option("--lhs", required=True, help="Subsumee concept.")
@click.option("--rhs", required=True, help="Subsumer concept.")
def subsume(ontology_path: str, lhs: str, rhs: str):
    """Decide whether the ontology entails LHS [= RHS."""
    ontology = read_ontology(ontology_path)
    left, right = parse_concept(lhs), parse_concept(rhs)
    entailed = subsumes(ontology, left, right)
    record = SubsumptionRecord(lhs=render_concept(left), rhs=render_concept(right), entailed=entailed)
    emit(record, ["entailed" if entailed else "not entailed"], entailed)


@click.command("equiv")
@click.argument("first", type=EXISTING_FILE)
@click.argument("second", type=EXISTING_FILE)
def equiv(first: str, second: str):
    """Decide whether two ontologies are logically equivalent."""
    holds = equivalent(read_ontology(first), read_ontology(second))
    emit(EquivalenceRecord(first=first, second=second, equivalent=holds),
         ["equivalent" if holds else "not equivalent"], holds)


@click.command("uinterp")
@click.argument("ontology_path", type=EXISTING_FILE)
@click.option("--keep", required=True, help="Comma separated names to keep.")
@click.option("--policy", default="fixpoint", show_default=True, help="fixpoint, aux or approx:K.")
def uinterp(ontology_path: str, keep: str, policy: str):
    """Compute the uniform interpolant of an ontology for the kept names."""
    ontology = read_ontology(ontology_path)
    sigma = sigma_option(keep, ontology)
    result = uniform_interpolant(ontology, sigma, Policy.parse(policy))
    text = render_result(result)
    record = UniformInterpolantRecord(
        ontology=text,
        signature=list(sigma.sorted_names()),
        policy=str(result.policy),
        used_fixpoints=result.used_fixpoints,
        auxiliary_names=sorted(result.auxiliary_names),
    )
    emit(record, text.rstrip("\n").splitlines())


@click.command("cinterp")
@click.option("--o1", "first_path", type=EXISTING_FILE, help="Ontology of the subsumee side.")
@click.option("--o2", "second_path", type=EXISTING_FILE, help="Ontology of the subsumer side.")
@click.option("--c1", "lhs", required=True, help="Subsumee concept.")
@click.option("--c2", "rhs", required=True, help="Subsumer concept.")
@click.option("--sigma", default=None, help="Comma separated signature; defaults to the shared names.")
@click.option("--no-prune", is_flag=True, help="Skip reasoner-checked simplification of the interpolant.")
def cinterp(first_path: Optional[str], second_path: Optional[str], lhs: str, rhs: str, sigma: Optional[str],
            no_prune: bool):
    """Craig interpolant (or Σ-interpolant with --sigma) of C1 [= C2."""
    first, second = read_ontology(first_path), read_ontology(second_path)
    left, right = parse_concept(lhs), parse_concept(rhs)
    chosen = sigma_option(sigma, first, second, left, right) if sigma is not None else None
    report = craig_or_sigma_interpolant(first, second, left, right, chosen, prune=not no_prune)
    emit(report, _report_lines(report), report.status is InterpolantStatus.FOUND)


@click.command("cinterp-alco")
@click.option("--o", "ontology_path", type=EXISTING_FILE, help="Background ontology.")
@click.option("--c1", "lhs", required=True, help="Subsumee concept.")
@click.option("--c2", "rhs", required=True, help="Subsumer concept.")
@click.option("--sigma", required=True, help="Comma separated signature, individuals included.")
@click.option("--exists-only", is_flag=True, help="Only decide whether an interpolant exists.")
def cinterp_alco(ontology_path: Optional[str], lhs: str, rhs: str, sigma: str, exists_only: bool):
    """Interpolant existence for inputs that may mention individuals."""
    ontology = read_ontology(ontology_path)
    left, right = parse_concept(lhs), parse_concept(rhs)
    chosen = sigma_option(sigma, ontology, left, right)
    if not exists_only:
        if ontology.has_nominals() or signature([left, right]).individuals:
            raise PreconditionError("with individuals only existence is decided; pass --exists-only")
        report = craig_or_sigma_interpolant(ontology, ontology, left, right, chosen)
        emit(report, _report_lines(report), report.status is InterpolantStatus.FOUND)
        return
    exists = interpolant_exists_alco(ontology, left, right, chosen)
    emit(ExistenceRecord(signature=list(chosen.sorted_names()), exists=exists),
         ["exists" if exists else "none exists"], exists)


@click.command("define")
@click.argument("ontology_path", type=EXISTING_FILE)
@click.option("--target", required=True, help="Concept to define.")
@click.option("--sigma", required=True, help="Comma separated names the definition may use.")
@click.option("--context", default="top", show_default=True, help="Context concept.")
def define(ontology_path: str, target: str, sigma: str, context: str):
    """Explicit definition of TARGET over the signature, if it is implicitly defined."""
    ontology = read_ontology(ontology_path)
    goal, where = parse_concept(target), parse_concept(context)
    chosen = sigma_option(sigma, ontology, goal, where)
    report = explicit_definition(ontology, where, goal, chosen)
    emit(report, _report_lines(report), report.status is InterpolantStatus.FOUND)


@click.command("diff")
@click.argument("first", type=EXISTING_FILE)
@click.argument("second", type=EXISTING_FILE)
@click.option("--sigma", required=True, help="Comma separated signature of the candidate inclusions.")
@click.option("--depth", default=1, show_default=True, help="Role depth of the candidates.")
@click.option("--budget", default=2000, show_default=True, help="Number of candidates checked at most.")
def diff(first: str, second: str, sigma: str, depth: int, budget: int):
    """Inclusions over the signature entailed by FIRST but not by SECOND (bounded)."""
    left, right = read_ontology(first), read_ontology(second)
    chosen = sigma_option(sigma, left, right)
    witnesses = [render_inclusion(axiom) for axiom in logical_diff_bounded(left, right, chosen, depth, budget)]
    record = DifferenceRecord(signature=list(chosen.sorted_names()), depth=depth, budget=budget, witnesses=witnesses)
    emit(record, witnesses or ["no difference within the bound"], not witnesses)


@click.group("oracle")
def oracle():
    """Finite-model oracles."""


@oracle.command("countermodel")
@click.argument("ontology_path", type=EXISTING_FILE)
@click.option("--lhs", required=True, help="Subsumee concept.")
@click.option("--rhs", required=True, help="Subsumer concept.")
@click.option("--max-domain", default=Config.MAX_COUNTERMODEL_DOMAIN, show_default=True,
              help="Largest domain size searched.")
def countermodel(ontology_path: str, lhs: str, rhs: str, max_domain: int):
    """Smallest model of the ontology refuting LHS [= RHS at element 0."""
    found = bounded_countermodel(read_ontology(ontology_path), parse_concept(lhs), parse_concept(rhs), max_domain)
    text = render_interpretation(found[0]) if found else None
    record = CountermodelRecord(found=found is not None, max_domain=max_domain, interpretation=text)
    emit(record, text.rstrip("\n").splitlines() if text else ["no countermodel within the bound"], found is not None)


@click.command("check-model")
@click.argument("interpretation_path", type=EXISTING_FILE)
@click.argument("ontology_path", type=EXISTING_FILE)
def check_model(interpretation_path: str, ontology_path: str):
    """Whether an interpretation is a model of an ontology."""
    interpretation = parse_interpretation(read_text(interpretation_path))
    violated = [render_inclusion(axiom) for axiom in read_ontology(ontology_path)
                if not satisfies(interpretation, axiom)]
    emit(ModelCheckRecord(holds=not violated, violated=violated), violated or ["model"], not violated)
