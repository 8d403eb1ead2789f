import pytest

from src.exceptions import PreconditionError
from src.reasoner.entailment import (
    entails, entails_ontology, equivalent, is_consistent, is_satisfiable, subsumes,
)
from src.reasoner.types import realizable_types
from src.semantics.countermodel import bounded_countermodel
from src.syntax.concepts import (
    And, ConceptInclusion, ConceptName, EMPTY_ONTOLOGY, Not, Ontology, TOP,
)
from src.syntax.operations import nnf
from src.syntax.parser import parse_concept, parse_ontology
from tests.generators import random_concept, random_ontology, seeded

UNI = parse_ontology("""
Uni [= some hasEnrolled.Grad and some hasEnrolled.Undergrad.
Grad [= not Undergrad.
Uni [= not Grad.
Uni [= not Undergrad.
""")


def test_uni_consequence():
    assert subsumes(UNI, ConceptName("Uni"), parse_concept("some hasEnrolled.(not Undergrad and not Uni)"))
    assert not subsumes(UNI, ConceptName("Uni"), ConceptName("Grad"))


def test_doctor_subsumption_without_ontology():
    lhs = parse_concept("some child.top and all child.Doctor")
    rhs = parse_concept("some child.(Doctor or Rich)")
    assert subsumes(EMPTY_ONTOLOGY, lhs, rhs)
    assert not subsumes(EMPTY_ONTOLOGY, rhs, lhs)


def test_everything_below_top():
    assert entails(UNI, ConceptInclusion(parse_concept("some hasEnrolled.Grad"), TOP))


def test_inconsistent_ontology_entails_everything():
    ontology = parse_ontology("top [= A. A [= not A.")
    assert not is_consistent(ontology)
    assert subsumes(ontology, TOP, ConceptName("Anything"))


def test_cyclic_ontology_reasoning():
    ontology = parse_ontology("A [= B. B [= some r.B.")
    assert subsumes(ontology, ConceptName("A"), parse_concept("some r.some r.some r.top"))
    assert is_satisfiable(ontology, ConceptName("A"))


def test_nominal_reasoning():
    ontology = parse_ontology("{a} [= A.")
    assert subsumes(ontology, parse_concept("some r.{a}"), parse_concept("some r.A"))
    assert subsumes(EMPTY_ONTOLOGY, parse_concept("{a} and some r.{a}"), parse_concept("not A or some r.A"))
    assert not subsumes(EMPTY_ONTOLOGY, parse_concept("some r.{a}"), parse_concept("some r.A"))


def test_fixpoints_rejected():
    with pytest.raises(PreconditionError):
        is_satisfiable(EMPTY_ONTOLOGY, parse_concept("nu X.some r.X"))


def test_ontology_entailment_and_equivalence():
    first = parse_ontology("A [= B and C.")
    second = parse_ontology("A [= B. A [= C.")
    assert equivalent(first, second)
    assert entails_ontology(first, parse_ontology("A [= B."))
    assert not entails_ontology(parse_ontology("A [= B."), first)


def test_invariant_under_nnf_and_axiom_order():
    rng = seeded(31)
    for _ in range(30):
        ontology = random_ontology(rng, axioms=3, depth=2)
        reversed_ontology = Ontology(tuple(reversed(ontology.axioms)))
        lhs, rhs = random_concept(rng, 2), random_concept(rng, 2)
        expected = subsumes(ontology, lhs, rhs)
        assert subsumes(reversed_ontology, nnf(lhs), nnf(rhs)) == expected


def test_lazy_search_agrees_with_type_elimination():
    rng = seeded(37)
    for _ in range(60):
        ontology = random_ontology(rng, axioms=rng.randint(1, 4), depth=2, concepts=("A", "B", "C"))
        lhs, rhs = random_concept(rng, 2, ("A", "B", "C")), random_concept(rng, 2, ("A", "B", "C"))
        query = And((lhs, Not(rhs)))
        by_types = not any(query in t for t in realizable_types(ontology, [query]))
        assert subsumes(ontology, lhs, rhs) == by_types


def test_agrees_with_bounded_countermodels():
    rng = seeded(41)
    for _ in range(200):
        ontology = random_ontology(rng, axioms=rng.randint(0, 4), depth=2)
        lhs, rhs = random_concept(rng, 2), random_concept(rng, 2)
        entailed = subsumes(ontology, lhs, rhs)
        countermodel = bounded_countermodel(ontology, lhs, rhs, 3)
        if countermodel is not None:
            assert not entailed
        if entailed:
            assert countermodel is None
