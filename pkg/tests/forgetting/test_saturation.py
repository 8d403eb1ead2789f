import pytest

from src.exceptions import PreconditionError, ResourceLimitError
from src.forgetting.clauses import DefinerContext, DLClause, Literal, clauses_to_ontology
from src.forgetting.clausify import clausify
from src.forgetting.saturation import eliminate_symbols, infer_step, propagate, resolve
from src.reasoner.difference import logical_diff_bounded
from src.syntax.concepts import Signature
from src.syntax.parser import parse_ontology

WORKED = parse_ontology("A [= some r.(B and C). some r.(C and D) [= E.")


def _worked():
    return clausify(WORKED)


def test_plain_resolution():
    context = DefinerContext()
    derived = infer_step(DLClause.of(Literal.pos("A"), Literal.pos("B")), DLClause.of(Literal.neg("A")), "A", context)
    assert derived == [DLClause.of(Literal.pos("B"))]


def test_resolution_with_two_negative_definers_is_inadmissible():
    _, context = _worked()
    third = DLClause.of(Literal.neg("D1"), Literal.pos("C"))
    fifth = DLClause.of(Literal.neg("D2"), Literal.neg("C"), Literal.neg("D"))
    assert resolve(third, fifth, "C", context) is None
    assert infer_step(third, fifth, "C", context) == []


def test_role_propagation_introduces_combined_definer():
    _, context = _worked()
    first = DLClause.of(Literal.neg("A"), Literal.exists("r", "D1"))
    fourth = DLClause.of(Literal.forall("r", "D2"), Literal.pos("E"))
    [derived] = infer_step(fourth, first, "r", context)
    combined, created = context.combine("D1", "D2")
    assert not created
    assert context.base_of[combined] == {"D1", "D2"}
    assert derived == DLClause.of(Literal.neg("A"), Literal.pos("E"), Literal.exists("r", combined))


def test_inference_preconditions():
    context = DefinerContext()
    with pytest.raises(PreconditionError):
        infer_step(DLClause.of(Literal.pos("A")), DLClause.of(Literal.pos("B")), "A", context)
    with pytest.raises(PreconditionError):
        propagate(DLClause.of(Literal.pos("A")), Literal.pos("A"), DLClause.of(Literal.pos("B")),
                  Literal.pos("B"), context)


def test_forgetting_in_worked_example():
    clauses, context = _worked()
    result, context = eliminate_symbols(clauses, context, {"C"})
    combined, _ = context.combine("D1", "D2")
    assert not any(clause.mentions("C") for clause in result)
    assert DLClause.of(Literal.neg(combined), Literal.neg("D")) in result
    assert DLClause.of(Literal.neg("A"), Literal.pos("E"), Literal.exists("r", combined)) in result
    assert DLClause.of(Literal.neg("A"), Literal.exists("r", "D1")) in result
    assert all(len(context.negative_definers(clause)) <= 1 for clause in result)


def test_repeated_combinations_hit_the_memo():
    clauses, context = _worked()
    _, context = eliminate_symbols(clauses, context, {"C"})
    assert context.reuse_hits > 0
    assert len(context.definers) == 3


def test_absent_name_leaves_clauses_unchanged():
    clauses, context = _worked()
    result, _ = eliminate_symbols(clauses, context, {"Z"})
    assert result == clauses


def test_pure_name_is_purified():
    ontology = parse_ontology("A [= B or C. C [= some r.B.")
    clauses, context = clausify(ontology)
    result, _ = eliminate_symbols(clauses, context, {"B"})
    assert not any(clause.mentions("B") for clause in result)
    sigma = Signature(frozenset({"A", "C"}), frozenset({"r"}))
    assert logical_diff_bounded(ontology, clauses_to_ontology(result), sigma, 2, 600) == []


def test_role_forgetting_keeps_unsatisfiable_successor_consequence():
    ontology = parse_ontology("A [= all r.B. C [= some r.(not B).")
    clauses, context = clausify(ontology)
    result, _ = eliminate_symbols(clauses, context, {"B", "r"})
    assert DLClause.of(Literal.neg("A"), Literal.neg("C")) in result
    assert not any(clause.mentions("r") for clause in result)


def test_forgetting_definers_is_rejected():
    clauses, context = _worked()
    with pytest.raises(PreconditionError):
        eliminate_symbols(clauses, context, {"D1"})


def test_resource_cap():
    clauses, context = _worked()
    with pytest.raises(ResourceLimitError):
        eliminate_symbols(clauses, context, {"C"}, limit=0)
