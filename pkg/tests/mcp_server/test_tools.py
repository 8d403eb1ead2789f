import pytest

from src.lp.parser import parse_program
from src.lp.semantics import ht_equivalent
from src.mcp_server.tool.craig_interpolant_tool import compute_craig_interpolant
from src.mcp_server.tool.forget_atoms_tool import forget_atoms
from src.mcp_server.tool.subsumption_tool import check_subsumption
from src.mcp_server.tool.uniform_interpolant_tool import compute_uniform_interpolant
from src.reasoner.entailment import equivalent
from src.records import InterpolantStatus
from src.syntax.parser import parse_ontology

LETHE = "A [= some r.(B and C). some r.(C and D) [= E."


def test_uniform_interpolant_tool():
    record = compute_uniform_interpolant(LETHE, "A,B,D,E,r")
    assert record.policy == "fixpoint"
    assert not record.used_fixpoints
    assert equivalent(parse_ontology(record.ontology), parse_ontology("A [= some r.B. A and all r.(not B or D) [= E."))


def test_cyclic_input_with_auxiliary_policy():
    record = compute_uniform_interpolant("A [= B. B [= some r.B.", "A,r", policy="aux")
    assert record.auxiliary_names


def test_subsumption_tool():
    assert check_subsumption(LETHE, "A", "some r.C").entailed
    record = check_subsumption("", "A", "B")
    assert not record.entailed
    assert record.lhs == "A"


def test_craig_interpolant_tool():
    report = compute_craig_interpolant("Doctor [= Person.", "some child.Doctor", "some child.Person")
    assert report.status is InterpolantStatus.FOUND
    assert report.verification.passed
    assert compute_craig_interpolant("", "A", "B").status is InterpolantStatus.NOT_ENTAILED


def test_forget_atoms_tool():
    report = forget_atoms("a :- not b. b :- not c. e :- d. d :- a.", "d")
    assert report.forgotten == ["d"]
    assert ht_equivalent(parse_program(report.program), parse_program("a :- not b. b :- not c. e :- a."),
                         frozenset("abce"))


@pytest.mark.parametrize("call", [
    lambda: check_subsumption("A [=", "A", "B"),
    lambda: check_subsumption("", "", "B"),
    lambda: compute_uniform_interpolant(LETHE, "A", policy="sometimes"),
    lambda: forget_atoms("a.", "z"),
    lambda: forget_atoms("A.", "a"),
])
def test_errors_surface_as_value_errors(call):
    with pytest.raises(ValueError):
        call()
