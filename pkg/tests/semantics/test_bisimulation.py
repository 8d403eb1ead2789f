from src.semantics.bisimulation import Flavor, greatest_bisimulation, is_bisimulation
from src.semantics.evaluation import extension_eval
from src.semantics.interpretation import Interpretation
from src.syntax.concepts import Signature
from tests.generators import random_concept, random_interpretation, seeded

# a with an r-loop (0) and an isolated element (1)
FIRST = Interpretation(2, {}, {"r": {(0, 0)}}, {"a": 0})
# a isolated (0), b in A (1), d with an r-loop (2) reached from b
SECOND = Interpretation(3, {"A": {1}}, {"r": {(1, 2), (2, 2)}}, {"a": 0})


def test_loops_relate_without_individuals_in_signature():
    relation = greatest_bisimulation(FIRST, SECOND, Signature(roles=frozenset({"r"})), Flavor.ALCO)
    assert (0, 1) in relation
    assert (0, 2) in relation
    assert (0, 0) not in relation


def test_individuals_in_signature_are_respected():
    sigma = Signature(roles=frozenset({"r"}), individuals=frozenset({"a"}))
    relation = greatest_bisimulation(FIRST, SECOND, sigma, Flavor.ALCO)
    assert (0, 1) not in relation and (0, 2) not in relation


def test_identity_is_contained():
    rng = seeded(13)
    sigma = Signature(frozenset({"A", "B"}), frozenset({"r"}))
    for _ in range(20):
        interpretation = random_interpretation(rng, 4, concepts=("A", "B"), roles=("r",))
        relation = greatest_bisimulation(interpretation, interpretation, sigma)
        assert {(d, d) for d in interpretation.domain} <= relation
        assert is_bisimulation(interpretation, interpretation, sigma, relation)


def test_atom_disagreement_never_related():
    i1 = Interpretation(1, {"A": {0}}, {})
    i2 = Interpretation(1, {}, {})
    assert greatest_bisimulation(i1, i2, Signature(frozenset({"A"}))) == frozenset()
    assert greatest_bisimulation(i1, i2, Signature()) == {(0, 0)}


def test_bisimilar_elements_agree_on_signature_concepts():
    rng = seeded(17)
    sigma = Signature(frozenset({"A", "B"}), frozenset({"r"}))
    for _ in range(15):
        i1 = random_interpretation(rng, rng.randint(1, 4), concepts=("A", "B", "C"), roles=("r", "s"))
        i2 = random_interpretation(rng, rng.randint(1, 4), concepts=("A", "B", "C"), roles=("r", "s"))
        relation = greatest_bisimulation(i1, i2, sigma)
        assert is_bisimulation(i1, i2, sigma, relation)
        for _ in range(10):
            concept = random_concept(rng, depth=3, concepts=("A", "B"), roles=("r",))
            left, right = extension_eval(i1, concept), extension_eval(i2, concept)
            assert all((d in left) == (e in right) for d, e in relation)
