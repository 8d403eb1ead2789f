import pytest

from src.exceptions import DslSyntaxError, FixpointVariableError
from src.syntax.concepts import (
    And, ConceptInclusion, ConceptName, Exists, Forall, Nominal, Not, Nu, Ontology, Or, TOP, Var,
)
from src.syntax.parser import check_fixpoint_variables, parse_concept, parse_names, parse_ontology
from src.syntax.render import render_ontology
from tests.generators import random_ontology, seeded

A, B, C = ConceptName("A"), ConceptName("B"), ConceptName("C")


def test_parse_car_axiom():
    ontology = parse_ontology("Car [= some hasPart.PrimeMover.")
    assert ontology == Ontology((ConceptInclusion(ConceptName("Car"),
                                                  Exists("hasPart", ConceptName("PrimeMover"))),))


def test_parse_empty_text():
    assert len(parse_ontology("")) == 0
    assert len(parse_ontology("# only a comment\n")) == 0


def test_syntax_error_names_token():
    with pytest.raises(DslSyntaxError) as info:
        parse_ontology("A [= and")
    assert info.value.token == "and"
    assert "line 1" in str(info.value)


def test_precedence():
    assert parse_concept("A or B and C") == Or((A, And((B, C))))
    assert parse_concept("not A and B") == And((Not(A), B))
    assert parse_concept("some r.A and B") == And((Exists("r", A), B))
    assert parse_concept("all r.(A or B)") == Forall("r", Or((A, B)))


def test_nominals_and_top():
    assert parse_concept("{a} and some r.{a}") == And((Nominal("a"), Exists("r", Nominal("a"))))
    assert parse_concept("top") == TOP


def test_equality_gives_two_inclusions():
    ontology = parse_ontology("A = B and C.")
    assert list(ontology) == [ConceptInclusion(A, And((B, C))), ConceptInclusion(And((B, C)), A)]


def test_fixpoints():
    assert parse_concept("nu X.some r.X") == Nu("X", Exists("r", Var("X")))
    assert parse_concept("nu Y.(A and all r.Y)") == Nu("Y", And((A, Forall("r", Var("Y")))))
    with pytest.raises(FixpointVariableError):
        parse_concept("nu X.(A and not X)")
    with pytest.raises(FixpointVariableError):
        check_fixpoint_variables(Exists("r", Var("X")))


def test_variable_scope():
    assert parse_concept("some r.X") == Exists("r", ConceptName("X"))
    assert parse_concept("X and nu X.some r.X") == And((ConceptName("X"), Nu("X", Exists("r", Var("X")))))


@pytest.mark.parametrize("text", ["X1 [= A.", "X [= some r.X1.", "A [= X and nu X2.some r.X2."])
def test_names_like_variables_round_trip(text):
    ontology = parse_ontology(text)
    assert parse_ontology(render_ontology(ontology)) == ontology


def test_concept_name_x1_renders_back():
    ontology = Ontology((ConceptInclusion(ConceptName("X1"), A),))
    assert parse_ontology(render_ontology(ontology)) == ontology


def test_duplicates_stored_once():
    assert len(parse_ontology("A [= B and C. A [= C and B.")) == 1


def test_parse_names():
    assert parse_names("A, B,r") == ["A", "B", "r"]
    assert parse_names(None) == []
    with pytest.raises(DslSyntaxError):
        parse_names("A,1x")


def test_render_round_trip_random():
    rng = seeded(7)
    for _ in range(50):
        ontology = random_ontology(rng, axioms=3, depth=3, concepts=("A", "B", "C", "D", "E"))
        assert parse_ontology(render_ontology(ontology)) == ontology
