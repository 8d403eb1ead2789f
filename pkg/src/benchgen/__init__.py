"""Benchmark generators: counter ontologies, built-in examples and seeded random inputs."""

from src.benchgen.counter import (
    COUNTER_SIGNATURE, CounterManifest, counter_files, counter_goal_family, counter_ontology, sample_goal_family,
)
from src.benchgen.random_gen import random_concept, random_ontology, random_program
from src.benchgen.registry import Example, ExampleKind, ExampleRegistry, builtin_examples, self_check

__all__ = [
    "COUNTER_SIGNATURE",
    "CounterManifest",
    "Example",
    "ExampleKind",
    "ExampleRegistry",
    "builtin_examples",
    "counter_files",
    "counter_goal_family",
    "counter_ontology",
    "random_concept",
    "random_ontology",
    "random_program",
    "sample_goal_family",
    "self_check",
]
