import pytest

from src.exceptions import DslSyntaxError, PolarityError
from src.forgetting.clauses import DefinerContext, DLClause, Literal
from src.forgetting.clausify import clausify
from src.forgetting.definers import Policy, PolicyKind, definer_elimination
from src.syntax.concepts import ConceptInclusion, ConceptName, Exists, Nu, Ontology, Var
from src.syntax.parser import parse_ontology

A = ConceptName("A")


def _context(*definers):
    context = DefinerContext({"A", "B"})
    for definer in definers:
        context.for_filler(definer, definer)
    return context


def test_ackermann_substitution():
    context = _context("filler")
    clauses = {DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")), DLClause.of(Literal.neg("D1"), Literal.pos("B"))}
    result = definer_elimination(clauses, context)
    assert result.ontology == parse_ontology("A [= some r.B.")
    assert not result.used_fixpoints


def test_cyclic_definer_becomes_greatest_fixpoint():
    context = _context("filler")
    clauses = {DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
               DLClause.of(Literal.neg("D1"), Literal.exists("r", "D1"))}
    result = definer_elimination(clauses, context)
    assert result.ontology == Ontology((ConceptInclusion(A, Nu("X", Exists("r", Var("X")))),))
    assert result.used_fixpoints


def test_cyclic_definer_as_auxiliary_name():
    context = _context("filler")
    clauses = {DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
               DLClause.of(Literal.neg("D1"), Literal.exists("r", "D1"))}
    result = definer_elimination(clauses, context, Policy.parse("aux"))
    assert result.auxiliary_names == {"D1_def"}
    assert result.ontology == parse_ontology("A [= some r.D1_def. D1_def [= some r.D1_def.")
    assert not result.used_fixpoints


def test_cyclic_definer_approximated():
    context = _context("filler")
    clauses = {DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
               DLClause.of(Literal.neg("D1"), Literal.exists("r", "D1"))}
    result = definer_elimination(clauses, context, Policy.parse("approx:2"))
    assert result.ontology == parse_ontology("A [= some r.some r.some r.top.")
    assert not result.used_fixpoints


def test_unconstrained_definer_is_top():
    context = _context("filler")
    clauses = {DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")),
               DLClause.of(Literal.forall("r", "D1"), Literal.pos("B"))}
    result = definer_elimination(clauses, context)
    assert result.ontology == parse_ontology("A [= some r.top.")


def test_without_definers_clauses_read_back():
    clauses, context = clausify(parse_ontology("A [= B. B and C [= bot."))
    result = definer_elimination(clauses, context)
    assert result.ontology == parse_ontology("A [= B. B and C [= bot.")


def test_two_negative_definers_are_reported():
    context = _context("first", "second")
    clauses = {DLClause.of(Literal.neg("D1"), Literal.neg("D2"), Literal.pos("A"))}
    with pytest.raises(PolarityError):
        definer_elimination(clauses, context)


def test_policy_parsing():
    assert Policy.parse("fixpoint").kind == PolicyKind.FIXPOINT
    assert Policy.parse("aux").kind == PolicyKind.AUXILIARY
    assert Policy.parse("approx:3") == Policy(PolicyKind.APPROXIMATE, 3)
    assert str(Policy.parse("approx:3")) == "approx:3"
    with pytest.raises(DslSyntaxError):
        Policy.parse("approx")
