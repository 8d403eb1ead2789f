"""Benchmark subcommands: generators and the built-in example registry."""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import click

from src.benchgen.counter import counter_files
from src.benchgen.random_gen import random_ontology, random_program
from src.benchgen.registry import Example, builtin_examples, self_check
from src.cli.common import emit
from src.lp.parser import render_program
from src.records import ExampleRecord, GeneratedRecord, RegistryRecord, SelfCheckRecord, SelfCheckReport
from src.syntax.render import render_ontology

logger = logging.getLogger(__name__)


def _example_record(example: Example) -> ExampleRecord:
    return ExampleRecord(
        name=example.name,
        kind=example.kind.value,
        note=example.note,
        source=example.source.strip(),
        signature=list(example.signature.sorted_names()) if example.signature else [],
        expected=example.expected.strip() if example.expected else None,
        lhs=example.lhs,
        rhs=example.rhs,
    )


@click.group("bench")
def bench():
    """Benchmark generators and built-in examples."""


@bench.group("gen")
def gen():
    """Generate benchmark inputs."""


@gen.command("counter")
@click.argument("bits", type=int)
@click.option("--out-dir", type=click.Path(file_okay=False), default=None,
              help="Write counter_<bits>.dl and counter_<bits>.json here instead of printing.")
def gen_counter(bits: int, out_dir: Optional[str]):
    """The counter ontology with BITS bits and its manifest."""
    text, manifest = counter_files(bits)
    if out_dir is None:
        emit(manifest, text.rstrip("\n").splitlines())
        return
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    (target / f"counter_{bits}.dl").write_text(text, encoding="utf-8")
    (target / f"counter_{bits}.json").write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote counter benchmark with %d bits to %s", bits, target)
    emit(manifest, [str(target / f"counter_{bits}.dl"), str(target / f"counter_{bits}.json")])


@gen.command("random")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@click.option("--axioms", default=3, show_default=True, help="Number of axioms.")
@click.option("--depth", default=2, show_default=True, help="Role depth of each side.")
def gen_random(seed: int, axioms: int, depth: int):
    """A seeded random ALC ontology."""
    text = render_ontology(random_ontology(random.Random(seed), axioms, depth), header=[f"random ontology, seed {seed}"])
    emit(GeneratedRecord(kind="ontology", seed=seed, text=text), text.rstrip("\n").splitlines())


@gen.command("program")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@click.option("--rules", default=3, show_default=True, help="Number of rules.")
def gen_program(seed: int, rules: int):
    """A seeded random propositional program."""
    text = render_program(random_program(random.Random(seed), rules), header=[f"random program, seed {seed}"])
    emit(GeneratedRecord(kind="program", seed=seed, text=text), text.rstrip("\n").splitlines())


@bench.command("list")
def bench_list():
    """Names and notes of the built-in examples."""
    examples = [_example_record(example) for example in builtin_examples()]
    emit(RegistryRecord(examples=examples),
         [f"{example.name:<14} {example.kind:<11} {example.note}" for example in examples])


@bench.command("show")
@click.argument("name")
def bench_show(name: str):
    """Source and expected artifact of one built-in example."""
    record = _example_record(builtin_examples().get(name))
    lines = [f"# {record.note}"]
    lines += record.source.splitlines() if record.source else []
    if record.lhs is not None:
        lines.append(f"# lhs: {record.lhs}")
        lines.append(f"# rhs: {record.rhs}")
    if record.expected is not None:
        lines.append(f"# expected over {', '.join(record.signature)}:")
        lines += [f"#   {line.strip()}" for line in record.expected.splitlines() if line.strip()]
    emit(record, lines)


@bench.command("check")
@click.option("--jobs", default=1, show_default=True, help="Examples checked in parallel.")
def bench_check(jobs: int):
    """Check every expected artifact of the built-in examples against the reasoner."""
    examples = list(builtin_examples())
    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        verdicts = list(pool.map(self_check, examples))
    results = [SelfCheckRecord(name=example.name, kind=example.kind.value, passed=passed)
               for example, passed in zip(examples, verdicts)]
    report = SelfCheckReport(results=results)
    emit(report, [f"{result.name}: {'ok' if result.passed else 'FAILED'}" for result in results], report.passed)
