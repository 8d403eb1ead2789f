from src.lp.parser import parse_program
from src.lp.program import EMPTY_PROGRAM, HTPair, subsets
from src.lp.semantics import (
    Relation, answer_sets, classical_models, entails_lp, ht_models, is_ht_model, reduct,
)
from tests.generators import random_program, seeded

PROGRAM = parse_program("a :- not b. b :- not c. e :- d. d :- a.")


def pair(here, there):
    return HTPair(frozenset(here), frozenset(there))


def test_reduct():
    assert reduct(PROGRAM, {"b", "d", "e"}).rules == parse_program("b. e :- d. d :- a.").rules


def test_reduct_with_empty_interpretation_drops_double_negation():
    program = parse_program("a :- not not b. c :- not d.")
    assert reduct(program, set()).rules == parse_program("c.").rules


def test_reduct_keeps_negation_free_programs():
    rng = seeded(103)
    for _ in range(20):
        program = random_program(rng, rules=4)
        positive = reduct(program, program.atoms)
        assert reduct(positive, set()).rules == positive.rules


def test_ht_model_membership():
    models = ht_models(PROGRAM)
    assert pair("b", "bde") in models
    assert pair("bd", "bde") not in models
    assert is_ht_model(PROGRAM, {"b"}, {"b", "d", "e"})


def test_empty_program_has_every_pair():
    models = ht_models(EMPTY_PROGRAM, {"a", "b"})
    assert len(models) == 9


def test_answer_sets():
    assert answer_sets(PROGRAM) == {frozenset({"b"})}
    extended = PROGRAM.union(parse_program("c."))
    assert answer_sets(extended) == {frozenset("acde")}
    assert answer_sets(parse_program("a :- not a.")) == set()


def test_cautious_and_ht_entailment():
    assert entails_lp(PROGRAM, parse_program("b."), Relation.CAUTIOUS)
    assert entails_lp(PROGRAM, PROGRAM, Relation.HT)
    assert entails_lp(parse_program("a."), parse_program("a :- not b."), Relation.HT)
    assert not entails_lp(parse_program("a :- not b."), parse_program("a."), Relation.HT)


def test_persistence_and_answer_sets_on_random_programs():
    rng = seeded(107)
    for _ in range(60):
        program = random_program(rng, rules=rng.randint(1, 4))
        models = ht_models(program)
        assert all(HTPair(there, there) in models for _, there in models)
        classical = classical_models(program)
        for answer in answer_sets(program):
            assert HTPair(answer, answer) in models
            assert answer in classical
            assert not any(HTPair(here, answer) in models for here in subsets(answer) if here != answer)
