import pytest

from src.exceptions import PreconditionError
from src.semantics.bisimulation import Flavor
from src.semantics.countermodel import bounded_countermodel
from src.semantics.evaluation import extension_eval, is_model
from src.semantics.joint import joint_witness_bounded
from src.syntax.concepts import EMPTY_ONTOLOGY, ConceptName, Not, Signature
from src.syntax.parser import parse_concept, parse_ontology

A, B = ConceptName("A"), ConceptName("B")

UNI = parse_ontology("""
Uni [= some hasEnrolled.Grad and some hasEnrolled.Undergrad.
Grad [= not Undergrad.
Uni [= not Grad.
Uni [= not Undergrad.
""")


def test_one_element_countermodel():
    interpretation, witness = bounded_countermodel(EMPTY_ONTOLOGY, A, B, 3)
    assert interpretation.size == 1 and witness == 0
    assert interpretation.extension("A") == {0}
    assert interpretation.extension("B") == frozenset()


def test_uni_countermodel_within_three_elements():
    found = bounded_countermodel(UNI, ConceptName("Uni"), ConceptName("Grad"), 3)
    assert found is not None
    interpretation, witness = found
    assert interpretation.size == 3
    assert is_model(interpretation, UNI)
    assert witness in extension_eval(interpretation, ConceptName("Uni"))


def test_reflexive_query_has_no_countermodel():
    assert bounded_countermodel(UNI, A, A, 4) is None


def test_deterministic_result():
    first = bounded_countermodel(UNI, ConceptName("Uni"), Not(ConceptName("Uni")), 3)
    second = bounded_countermodel(UNI, ConceptName("Uni"), Not(ConceptName("Uni")), 3)
    assert first == second


def test_bound_checked_against_cap():
    with pytest.raises(PreconditionError):
        bounded_countermodel(EMPTY_ONTOLOGY, A, B, 100)
    with pytest.raises(PreconditionError):
        bounded_countermodel(EMPTY_ONTOLOGY, parse_concept("nu X.some r.X"), B, 2)


def test_joint_witness_for_nominal_counterexample():
    left = parse_concept("{a} and some r.{a}")
    right = parse_concept("A and not some r.A")
    witness = joint_witness_bounded(EMPTY_ONTOLOGY, left, right, Signature(roles=frozenset({"r"})), 3,
                                    Flavor.ALCO)
    assert witness is not None
    assert (0, 0) in witness.relation


def test_no_joint_witness_when_interpolant_exists():
    left = parse_concept("some child.top and all child.Doctor")
    right = parse_concept("not some child.(Doctor or Rich)")
    sigma = Signature(frozenset({"Doctor"}), frozenset({"child"}))
    assert joint_witness_bounded(EMPTY_ONTOLOGY, left, right, sigma, 3) is None


def test_empty_signature_relates_any_satisfiable_pair():
    witness = joint_witness_bounded(EMPTY_ONTOLOGY, A, B, Signature(), 2)
    assert witness is not None and witness.first.size == 1 and witness.second.size == 1
