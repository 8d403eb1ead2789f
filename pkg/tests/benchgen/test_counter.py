import json

import pytest

from src.benchgen.counter import (
    COUNTER_SIGNATURE, counter_files, counter_goal_family, counter_ontology, sample_goal_family,
)
from src.exceptions import PreconditionError, ResourceLimitError
from src.reasoner.entailment import subsumes
from src.syntax.concepts import ConceptName
from src.syntax.operations import role_depth
from src.syntax.parser import parse_ontology
from tests.generators import seeded

B = ConceptName("B")


def test_one_bit_axioms():
    ontology, sigma = counter_ontology(1)
    assert len(ontology) == 5
    assert sigma == COUNTER_SIGNATURE
    assert sorted(sigma.names) == ["A1", "A2", "B", "r", "s"]


def test_axiom_count_is_quadratic():
    for n in range(1, 6):
        ontology, _ = counter_ontology(n)
        assert len(ontology) == 2 + n * (n - 1) + 2 * n + 1


def test_bit_width_bounds():
    with pytest.raises(PreconditionError):
        counter_ontology(0)
    with pytest.raises(ResourceLimitError):
        counter_ontology(100)


def test_goal_family_sizes():
    assert counter_goal_family(0) == [ConceptName("A1"), ConceptName("A2")]
    for i in range(4):
        family = counter_goal_family(i)
        assert len(family) == 2 ** (2 ** i)
        assert len(set(family)) == len(family)
        assert all(role_depth(concept) == i for concept in family)
    with pytest.raises(ResourceLimitError):
        counter_goal_family(5)


def test_one_bit_counter_reaches_b_at_depth_one():
    ontology, _ = counter_ontology(1)
    assert all(subsumes(ontology, goal, B) for goal in counter_goal_family(1))


def test_one_bit_counter_wraps_at_depth_two():
    ontology, _ = counter_ontology(1)
    assert not any(subsumes(ontology, goal, B) for goal in counter_goal_family(2))


def test_two_bit_counter_sampled_at_depth_three():
    ontology, _ = counter_ontology(2)
    rng = seeded(89)
    for _ in range(50):
        assert subsumes(ontology, sample_goal_family(rng, 3), B)
    assert not subsumes(ontology, sample_goal_family(rng, 2), B)


def test_counter_files():
    text, manifest = counter_files(2)
    assert parse_ontology(text) == counter_ontology(2)[0]
    record = json.loads(manifest.model_dump_json())
    assert record["axioms"] == 9
    assert record["goal_depth"] == 3
    assert record["signature"] == ["A1", "A2", "B", "r", "s"]
