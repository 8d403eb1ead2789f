import pytest

from src.exceptions import PreconditionError, ResourceLimitError
from src.forgetting.definers import Policy
from src.forgetting.interpolant import forget, render_result, uniform_interpolant
from src.reasoner.difference import logical_diff_bounded
from src.reasoner.entailment import entails_ontology, equivalent, is_consistent
from src.syntax.concepts import (
    BOTTOM, ConceptInclusion, ConceptName, Exists, Nu, Ontology, Signature, TOP, Var,
)
from src.syntax.operations import signature
from src.syntax.parser import parse_ontology
from tests.generators import random_ontology, seeded

WORKED = parse_ontology("A [= some r.(B and C). some r.(C and D) [= E.")
CYCLIC = parse_ontology("A [= B. B [= some r.B.")
UNI = parse_ontology("""
Uni [= some hasEnrolled.Grad and some hasEnrolled.Undergrad.
Grad [= not Undergrad.
Uni [= not Grad.
Uni [= not Undergrad.
""")


def test_worked_example():
    sigma = Signature(frozenset({"A", "B", "D", "E"}), frozenset({"r"}))
    result = uniform_interpolant(WORKED, sigma)
    expected = parse_ontology("A [= some r.B. A and all r.(not B or D) [= E.")
    assert equivalent(result.ontology, expected)
    assert signature(result.ontology).issubset(sigma)


def test_university_example():
    result = forget(UNI, ["Grad"])
    expected = parse_ontology("""
    Uni [= not Undergrad.
    Uni [= some hasEnrolled.Undergrad and some hasEnrolled.(not Undergrad and not Uni).
    """)
    assert equivalent(result.ontology, expected)


def test_cyclic_ontology_needs_a_fixpoint():
    sigma = Signature(frozenset({"A"}), frozenset({"r"}))
    result = uniform_interpolant(CYCLIC, sigma)
    assert result.used_fixpoints
    assert result.ontology == Ontology((ConceptInclusion(ConceptName("A"), Nu("X", Exists("r", Var("X")))),))
    assert render_result(result) == "# policy: fixpoint\nA [= nu X.some r.X.\n"


def test_fixpoint_variable_avoids_concept_names():
    ontology = parse_ontology("X [= B. B [= some r.B.")
    result = forget(ontology, ["B"])
    x = ConceptName("X")
    assert result.ontology == Ontology((ConceptInclusion(x, Nu("X1", Exists("r", Var("X1")))),))
    assert parse_ontology(render_result(result)) == result.ontology


def test_cyclic_ontology_with_auxiliary_names():
    result = forget(CYCLIC, ["B"], Policy.parse("aux"))
    assert result.auxiliary_names
    assert not result.used_fixpoints
    [name] = result.auxiliary_names
    assert name.endswith("_def")
    assert signature(result.ontology).names <= {"A", "r", name}
    assert f"# auxiliary names: {name}" in render_result(result)


def test_cyclic_ontology_approximated():
    result = forget(CYCLIC, ["B"], Policy.parse("approx:2"))
    assert not result.used_fixpoints
    assert entails_ontology(CYCLIC, result.ontology)
    assert entails_ontology(result.ontology, parse_ontology("A [= some r.some r.top."))


def test_nothing_to_forget():
    result = uniform_interpolant(WORKED, signature(WORKED))
    assert result.ontology == WORKED


def test_inconsistent_input():
    result = forget(parse_ontology("top [= A. A [= not A. A [= B."), ["A"])
    assert result.ontology == Ontology((ConceptInclusion(TOP, BOTTOM),))
    assert not is_consistent(result.ontology)


def test_preconditions():
    with pytest.raises(PreconditionError):
        forget(parse_ontology("A [= nu X.some r.X."), ["A"])
    with pytest.raises(PreconditionError):
        forget(parse_ontology("A [= {a}."), ["A"])


def test_resource_cap_is_propagated():
    with pytest.raises(ResourceLimitError):
        uniform_interpolant(WORKED, Signature(frozenset({"A", "B", "D", "E"}), frozenset({"r"})), limit=0)


def test_random_suite_sound_pure_and_complete_at_the_bound():
    rng = seeded(61)
    names, roles = ("A", "B", "C"), ("r",)
    for _ in range(50):
        ontology = random_ontology(rng, axioms=rng.randint(1, 4), depth=rng.randint(1, 2), concepts=names,
                                   roles=roles)
        source = signature(ontology)
        if not source.names:
            continue
        dropped = rng.choice(sorted(source.names))
        sigma = source.without([dropped])
        try:
            result = uniform_interpolant(ontology, sigma)
        except ResourceLimitError:
            continue
        assert signature(result.ontology).issubset(sigma)
        if result.used_fixpoints:
            continue
        assert entails_ontology(ontology, result.ontology)
        assert logical_diff_bounded(ontology, result.ontology, sigma, 2, 5000) == []
