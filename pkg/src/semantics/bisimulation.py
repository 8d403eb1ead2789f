"""Greatest Σ-bisimulations between finite interpretations."""

import logging
from enum import Enum
from typing import FrozenSet, Set, Tuple

from src.semantics.interpretation import Interpretation
from src.syntax.concepts import Signature

logger = logging.getLogger(__name__)

Relation = FrozenSet[Tuple[int, int]]


class Flavor(str, Enum):
    ALC = "ALC"
    ALCO = "ALCO"


def _atom_agree(i1: Interpretation, i2: Interpretation, sigma: Signature, flavor: Flavor,
                d: int, e: int) -> bool:
    for name in sigma.concepts:
        if (d in i1.extension(name)) != (e in i2.extension(name)):
            return False
    if flavor is Flavor.ALCO:
        for name in sigma.individuals:
            if (i1.individuals.get(name) == d) != (i2.individuals.get(name) == e):
                return False
    return True


def _forth_back_ok(i1: Interpretation, i2: Interpretation, sigma: Signature,
                   relation: Set[Tuple[int, int]], d: int, e: int) -> bool:
    for role in sigma.roles:
        left, right = i1.successors(role, d), i2.successors(role, e)
        if any(not any((d2, e2) in relation for e2 in right) for d2 in left):
            return False
        if any(not any((d2, e2) in relation for d2 in left) for e2 in right):
            return False
    return True


def greatest_bisimulation(i1: Interpretation, i2: Interpretation, sigma: Signature,
                          flavor: Flavor = Flavor.ALC) -> Relation:
    """Largest relation meeting Atom, Forth and Back (and AtomI for ALCO) over ``sigma``."""
    flavor = Flavor(flavor)
    relation = {(d, e) for d in i1.domain for e in i2.domain
                if _atom_agree(i1, i2, sigma, flavor, d, e)}
    rounds = 0
    while True:
        rounds += 1
        violating = {pair for pair in relation if not _forth_back_ok(i1, i2, sigma, relation, *pair)}
        if not violating:
            break
        relation -= violating
    logger.debug("Bisimulation stabilised after %d rounds with %d pairs", rounds, len(relation))
    return frozenset(relation)


def is_bisimulation(i1: Interpretation, i2: Interpretation, sigma: Signature, relation: Relation,
                    flavor: Flavor = Flavor.ALC) -> bool:
    flavor = Flavor(flavor)
    pairs = set(relation)
    return all(_atom_agree(i1, i2, sigma, flavor, d, e) and _forth_back_ok(i1, i2, sigma, pairs, d, e)
               for d, e in pairs)


def bisimilar(i1: Interpretation, d: int, i2: Interpretation, e: int, sigma: Signature,
              flavor: Flavor = Flavor.ALC) -> bool:
    return (d, e) in greatest_bisimulation(i1, i2, sigma, flavor)
