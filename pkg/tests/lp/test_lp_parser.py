import pytest

from src.exceptions import DslSyntaxError
from src.lp.parser import parse_program, render_program, render_rule
from src.lp.program import LPRule
from tests.generators import random_program, seeded


def test_parse_full_rule():
    program = parse_program("a | b :- c, not d, not not e.")
    assert program.rules == (LPRule(frozenset({"a", "b"}), frozenset({"c"}), frozenset({"d"}), frozenset({"e"})),)
    assert program.atoms == frozenset("abcde")


def test_facts_and_constraints():
    program = parse_program("""
    % a fact and a constraint
    a.
    :- a, not b.
    """)
    fact, constraint = program.rules
    assert fact.is_fact
    assert constraint.head == frozenset()
    assert constraint.nbody == frozenset({"b"})


def test_canonical_rendering():
    rule = parse_program("x :- not not z, not y, w.").rules[0]
    assert render_rule(rule) == "x :- w, not y, not not z."
    assert render_rule(LPRule(nbody=frozenset({"a"}))) == ":- not a."
    assert render_program(parse_program("a."), header=["facts"]) == "% facts\na.\n"


def test_rendered_programs_parse_back():
    rng = seeded(101)
    for _ in range(20):
        program = random_program(rng, rules=4)
        assert parse_program(render_program(program)).rules == program.rules


@pytest.mark.parametrize("text", ["a :- b,.", "A.", "a :- b", "not."])
def test_malformed_programs(text):
    with pytest.raises(DslSyntaxError):
        parse_program(text)
