import pytest

from src.craig.extraction import interpolant_from_trace, prune_interpolant, verify_interpolant
from src.craig.mosaics import joint_consistency_alc
from src.exceptions import PreconditionError
from src.reasoner.entailment import equivalent_concepts
from src.syntax.concepts import EMPTY_ONTOLOGY, ConceptName, Not, Signature
from src.syntax.operations import concept_size, role_depth
from src.syntax.parser import parse_concept, parse_ontology
from tests.generators import random_concept, random_ontology, seeded

DOCTOR_LEFT = parse_concept("some child.top and all child.Doctor")
DOCTOR_SUPER = parse_concept("some child.(Doctor or Rich)")
DOCTOR_SIGMA = Signature(frozenset({"Doctor"}), frozenset({"child"}))


def _doctor():
    _, trace = joint_consistency_alc(EMPTY_ONTOLOGY, DOCTOR_LEFT, Not(DOCTOR_SUPER), DOCTOR_SIGMA)
    return interpolant_from_trace(trace, EMPTY_ONTOLOGY, DOCTOR_LEFT, Not(DOCTOR_SUPER), DOCTOR_SIGMA)


def test_doctor_interpolant():
    interpolant = _doctor()
    assert equivalent_concepts(EMPTY_ONTOLOGY, interpolant, parse_concept("some child.Doctor"))
    assert verify_interpolant(EMPTY_ONTOLOGY, DOCTOR_LEFT, DOCTOR_SUPER, interpolant, DOCTOR_SIGMA) == (
        True, True, True)


def test_atomic_separator_is_the_name():
    a = ConceptName("A")
    _, trace = joint_consistency_alc(EMPTY_ONTOLOGY, a, Not(a), Signature(frozenset({"A"})))
    assert interpolant_from_trace(trace, EMPTY_ONTOLOGY, a, Not(a), Signature(frozenset({"A"}))) == a


def test_jointly_consistent_trace_is_rejected():
    a, b = ConceptName("A"), ConceptName("B")
    _, trace = joint_consistency_alc(EMPTY_ONTOLOGY, a, b, Signature())
    with pytest.raises(PreconditionError):
        interpolant_from_trace(trace, EMPTY_ONTOLOGY, a, b, Signature())


def test_trace_for_other_inputs_is_rejected():
    _, trace = joint_consistency_alc(EMPTY_ONTOLOGY, DOCTOR_LEFT, Not(DOCTOR_SUPER), DOCTOR_SIGMA)
    with pytest.raises(PreconditionError):
        interpolant_from_trace(trace, EMPTY_ONTOLOGY, DOCTOR_LEFT, Not(DOCTOR_SUPER), Signature())
    with pytest.raises(PreconditionError):
        interpolant_from_trace(trace, parse_ontology("Doctor [= Rich."), DOCTOR_LEFT, Not(DOCTOR_SUPER),
                               DOCTOR_SIGMA)


def test_pruning_keeps_an_interpolant():
    interpolant = _doctor()
    pruned = prune_interpolant(EMPTY_ONTOLOGY, DOCTOR_LEFT, DOCTOR_SUPER, interpolant)
    assert concept_size(pruned) <= concept_size(interpolant)
    assert all(verify_interpolant(EMPTY_ONTOLOGY, DOCTOR_LEFT, DOCTOR_SUPER, pruned, DOCTOR_SIGMA))


def test_random_interpolants_are_verified_and_shallow():
    rng = seeded(79)
    names, roles = ("A", "B", "C"), ("r",)
    extracted = 0
    for _ in range(100):
        ontology = random_ontology(rng, axioms=rng.randint(0, 2), depth=1, concepts=names, roles=roles)
        c1, c2 = random_concept(rng, 2, names, roles), random_concept(rng, 2, names, roles)
        sigma = Signature(frozenset(rng.sample(list(names), rng.randint(0, 3))), frozenset(roles))
        consistent, trace = joint_consistency_alc(ontology, c1, Not(c2), sigma)
        if consistent:
            continue
        interpolant = interpolant_from_trace(trace, ontology, c1, Not(c2), sigma)
        extracted += 1
        assert role_depth(interpolant) <= max(trace.rounds, 0)
        assert all(verify_interpolant(ontology, c1, c2, interpolant, sigma))
    assert extracted
