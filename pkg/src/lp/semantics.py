"""Reduct, HT-models, answer sets and the two entailment relations between programs."""

import logging
from enum import Enum
from typing import Iterable, Optional, Set

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.lp.program import Atoms, HTPair, LPProgram, LPRule, subsets

logger = logging.getLogger(__name__)


class Relation(str, Enum):
    HT = "ht"
    CAUTIOUS = "cautious"


def universe_of(universe: Optional[Iterable[str]], *programs: LPProgram) -> Atoms:
    atoms = frozenset().union(*(program.atoms for program in programs))
    if universe is None:
        result = atoms
    else:
        result = frozenset(universe)
        if not atoms <= result:
            missing = ", ".join(sorted(atoms - result))
            raise PreconditionError(f"universe is missing program atoms {missing}")
    if len(result) > Config.LP_MAX_ATOMS:
        raise ResourceLimitError(f"{len(result)} atoms exceed the enumeration cap of {Config.LP_MAX_ATOMS}")
    return result


def reduct(program: LPProgram, interpretation: Iterable[str]) -> LPProgram:
    """Negation-free rules ``head <- pbody`` of the rules whose negative conditions hold."""
    chosen = frozenset(interpretation)
    return LPProgram(tuple(
        LPRule(rule.head, rule.pbody)
        for rule in program
        if not rule.nbody & chosen and rule.nnbody <= chosen
    ), program.declared)


def is_model(program: LPProgram, interpretation: Iterable[str]) -> bool:
    chosen = frozenset(interpretation)
    return all(rule.holds(chosen) for rule in program)


def is_ht_model(program: LPProgram, here: Iterable[str], there: Iterable[str]) -> bool:
    here, there = frozenset(here), frozenset(there)
    return here <= there and all(rule.holds_ht(here, there) for rule in program)


def classical_models(program: LPProgram, universe: Optional[Iterable[str]] = None) -> Set[Atoms]:
    return {model for model in subsets(universe_of(universe, program)) if is_model(program, model)}


def ht_models(program: LPProgram, universe: Optional[Iterable[str]] = None) -> Set[HTPair]:
    """Every ``<X, Y>`` with ``X <= Y <= universe`` such that ``Y |= P`` and ``X |= P^Y``."""
    atoms = universe_of(universe, program)
    pairs: Set[HTPair] = set()
    for there in subsets(atoms):
        if not is_model(program, there):
            continue
        for here in subsets(there):
            if all(rule.holds_ht(here, there) for rule in program):
                pairs.add(HTPair(here, there))
    return pairs


def answer_sets(program: LPProgram) -> Set[Atoms]:
    """Models ``Y`` such that no proper subset of ``Y`` satisfies the reduct ``P^Y``."""
    found: Set[Atoms] = set()
    for there in subsets(universe_of(None, program)):
        if not is_model(program, there):
            continue
        positive = reduct(program, there)
        if any(is_model(positive, here) for here in subsets(there) if here != there):
            continue
        found.add(there)
    logger.debug("Program with %d rules has %d answer sets", len(program), len(found))
    return found


def exclude(models: Iterable[Atoms], forgotten: Iterable[str]) -> Set[Atoms]:
    """``{X \\ V | X in models}``."""
    forgotten = frozenset(forgotten)
    return {model - forgotten for model in models}


def entails_lp(first: LPProgram, second: LPProgram, relation: Relation = Relation.HT,
               universe: Optional[Iterable[str]] = None) -> bool:
    """``HT(first) <= HT(second)`` or ``AS(first) <= AS(second)`` over the joint atoms."""
    if Relation(relation) is Relation.HT:
        atoms = universe_of(universe, first, second)
        return ht_models(first, atoms) <= ht_models(second, atoms)
    return answer_sets(first) <= answer_sets(second)


def ht_equivalent(first: LPProgram, second: LPProgram, universe: Optional[Iterable[str]] = None) -> bool:
    atoms = universe_of(universe, first, second)
    return ht_models(first, atoms) == ht_models(second, atoms)
