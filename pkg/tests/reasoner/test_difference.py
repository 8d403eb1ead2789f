from src.reasoner.difference import (
    candidate_inclusions, conservative_extension_bounded, inseparable_bounded, is_uniform_interpolant_bounded,
    logical_diff_bounded,
)
from src.syntax.concepts import ConceptInclusion, ConceptName, EMPTY_ONTOLOGY, Signature, TOP
from src.syntax.parser import parse_ontology

A, B = ConceptName("A"), ConceptName("B")

UNI = parse_ontology("""
Uni [= some hasEnrolled.Grad and some hasEnrolled.Undergrad.
Grad [= not Undergrad.
Uni [= not Grad.
Uni [= not Undergrad.
""")
UNI_INTERPOLANT = parse_ontology("""
Uni [= not Undergrad.
Uni [= some hasEnrolled.Undergrad and some hasEnrolled.(not Undergrad and not Uni).
""")
UNI_SIGMA = Signature(frozenset({"Uni", "Undergrad"}), frozenset({"hasEnrolled"}))


def test_simple_difference():
    diff = logical_diff_bounded(parse_ontology("A [= B."), EMPTY_ONTOLOGY, Signature(frozenset({"A", "B"})), 0, 100)
    assert ConceptInclusion(A, B) in diff


def test_identical_ontologies_have_no_difference():
    assert logical_diff_bounded(UNI, UNI, UNI_SIGMA, 1, 500) == []


def test_uni_interpolant_is_inseparable_at_the_bound():
    assert logical_diff_bounded(UNI, UNI_INTERPOLANT, UNI_SIGMA, 2, 5000) == []
    assert is_uniform_interpolant_bounded(UNI, UNI_INTERPOLANT, UNI_SIGMA, 2, 5000)


def test_weaker_candidate_is_rejected():
    weaker = parse_ontology("Uni [= not Undergrad.")
    assert not is_uniform_interpolant_bounded(UNI, weaker, UNI_SIGMA, 1, 2000)


def test_candidate_order_is_deterministic_and_bounded():
    sigma = Signature(frozenset({"A"}), frozenset({"r"}))
    first = list(candidate_inclusions(sigma, 2, 300))
    assert len(first) == 300
    assert first == list(candidate_inclusions(sigma, 2, 300))
    assert first[0] == ConceptInclusion(TOP, A)


def test_conservative_extension():
    small = parse_ontology("A [= B.")
    assert conservative_extension_bounded(small, parse_ontology("A [= B. B [= C."), 1, 500)
    assert not conservative_extension_bounded(small, parse_ontology("A [= B. B [= A."), 1, 500)


def test_inseparable():
    sigma = Signature(frozenset({"A", "C"}))
    assert inseparable_bounded(parse_ontology("A [= B. B [= C."), parse_ontology("A [= C."), sigma, 1, 500)
