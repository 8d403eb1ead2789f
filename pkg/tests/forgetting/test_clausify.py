import pytest

from src.exceptions import PreconditionError
from src.forgetting.clauses import DLClause, Literal, clauses_to_ontology
from src.forgetting.clausify import clausify
from src.reasoner.entailment import entails
from src.syntax.concepts import ConceptInclusion
from src.syntax.parser import parse_ontology
from tests.generators import random_concept, random_ontology, seeded

WORKED = parse_ontology("A [= some r.(B and C). some r.(C and D) [= E.")


def test_restriction_filler_gets_a_definer():
    clauses, context = clausify(parse_ontology("A [= some r.(B or C)."))
    assert context.definers == {"D1"}
    assert clauses == {
        DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
        DLClause.of(Literal.neg("D1"), Literal.pos("B"), Literal.pos("C")),
    }


def test_plain_inclusion_is_one_clause():
    clauses, context = clausify(parse_ontology("A [= B."))
    assert clauses == {DLClause.of(Literal.neg("A"), Literal.pos("B"))}
    assert not context.definers


def test_worked_example_clauses():
    clauses, _ = clausify(WORKED)
    assert clauses == {
        DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
        DLClause.of(Literal.neg("D1"), Literal.pos("B")),
        DLClause.of(Literal.neg("D1"), Literal.pos("C")),
        DLClause.of(Literal.forall("r", "D2"), Literal.pos("E")),
        DLClause.of(Literal.neg("D2"), Literal.neg("C"), Literal.neg("D")),
    }


def test_definers_avoid_user_names():
    _, context = clausify(parse_ontology("D1 [= some r.A."))
    assert "D1" not in context.definers
    assert context.definers == {"D2"}


def test_shared_fillers_reuse_definers():
    clauses, context = clausify(parse_ontology("A [= some r.B. C [= all r.B."))
    assert context.definers == {"D1"}
    assert context.reuse_hits == 1
    assert DLClause.of(Literal.neg("C"), Literal.forall("r", "D1")) in clauses


def test_trivial_restrictions_are_folded():
    clauses, context = clausify(parse_ontology("A [= some r.bot. B [= all r.top."))
    assert clauses == {DLClause.of(Literal.neg("A"))}
    assert not context.definers


def test_nested_restrictions_keep_one_negative_definer():
    rng = seeded(51)
    for _ in range(40):
        clauses, context = clausify(random_ontology(rng, axioms=3, depth=3))
        assert all(len(context.negative_definers(clause)) <= 1 for clause in clauses)
        assert not any(clause.is_tautology() for clause in clauses)


def test_clause_set_agrees_on_original_signature():
    rng = seeded(53)
    names = ("A", "B", "C")
    for _ in range(15):
        ontology = random_ontology(rng, axioms=2, depth=2, concepts=names, roles=("r",))
        clauses, _ = clausify(ontology)
        normal = clauses_to_ontology(clauses)
        for _ in range(10):
            axiom = ConceptInclusion(random_concept(rng, 2, names, ("r",)), random_concept(rng, 2, names, ("r",)))
            assert entails(ontology, axiom) == entails(normal, axiom)


def test_rejects_nominals_and_fixpoints():
    with pytest.raises(PreconditionError):
        clausify(parse_ontology("A [= {a}."))
    with pytest.raises(PreconditionError):
        clausify(parse_ontology("A [= nu X.some r.X."))
