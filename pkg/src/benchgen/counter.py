"""Binary counter ontologies whose uniform interpolants blow up, and their goal concepts."""

import logging
import random
from itertools import product
from typing import List, Tuple

from pydantic import BaseModel, Field

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.syntax.concepts import (
    And, Concept, ConceptInclusion, ConceptName, Exists, Ontology, Signature, conjunction,
)
from src.syntax.render import render_ontology

logger = logging.getLogger(__name__)

COUNTER_SIGNATURE = Signature(frozenset({"A1", "A2", "B"}), frozenset({"r", "s"}))


def _one(i: int) -> Concept:
    return ConceptName(f"One{i}")


def _zero(i: int) -> Concept:
    return ConceptName(f"Zero{i}")


def _both(filler: Concept) -> Concept:
    return And((Exists("r", filler), Exists("s", filler)))


def counter_ontology(n: int) -> Tuple[Ontology, Signature]:
    """An ``n``-bit counter: both successors at value k give value k + 1.

    Leaves in ``A1`` or ``A2`` count zero and every element whose bits are
    all one is in ``B``.
    """
    if n < 1:
        raise PreconditionError("the counter needs at least one bit")
    if n > Config.COUNTER_MAX_BITS:
        raise ResourceLimitError(f"{n} bits exceed the configured cap of {Config.COUNTER_MAX_BITS}")
    zeros = conjunction(_zero(i) for i in range(1, n + 1))
    axioms: List[ConceptInclusion] = [
        ConceptInclusion(ConceptName("A1"), zeros),
        ConceptInclusion(ConceptName("A2"), zeros),
    ]
    for i in range(1, n + 1):
        for j in range(1, i):
            axioms.append(ConceptInclusion(_both(And((_zero(i), _zero(j)))), _zero(i)))
            axioms.append(ConceptInclusion(_both(And((_one(i), _zero(j)))), _one(i)))
    for i in range(1, n + 1):
        lower = [_one(j) for j in range(i - 1, 0, -1)]
        axioms.append(ConceptInclusion(_both(conjunction([_zero(i)] + lower)), _one(i)))
        axioms.append(ConceptInclusion(_both(conjunction([_one(i)] + lower)), _zero(i)))
    axioms.append(ConceptInclusion(conjunction(_one(i) for i in range(1, n + 1)), ConceptName("B")))
    logger.debug("Counter ontology with %d bits has %d axioms", n, len(axioms))
    return Ontology(tuple(axioms)), COUNTER_SIGNATURE


def counter_goal_family(i: int) -> List[Concept]:
    """All full binary r/s-trees of depth ``i`` with leaves ``A1`` or ``A2``; ``2^(2^i)`` of them."""
    if i < 0:
        raise PreconditionError("depth must be nonnegative")
    if i > Config.GOAL_FAMILY_MAX_DEPTH:
        raise ResourceLimitError(f"depth {i} exceeds the materialisation cap of {Config.GOAL_FAMILY_MAX_DEPTH}; "
                                 "sample instead")
    family: List[Concept] = [ConceptName("A1"), ConceptName("A2")]
    for _ in range(i):
        family = [And((Exists("r", left), Exists("s", right))) for left, right in product(family, family)]
    return family


def sample_goal_family(rng: random.Random, i: int) -> Concept:
    """One uniformly chosen member of the depth-``i`` goal family."""
    if i == 0:
        return ConceptName(rng.choice(("A1", "A2")))
    return And((Exists("r", sample_goal_family(rng, i - 1)), Exists("s", sample_goal_family(rng, i - 1))))


class CounterManifest(BaseModel):
    family: str = Field("counter", description="Benchmark family name.")
    bits: int = Field(..., description="Counter width.")
    axioms: int = Field(..., description="Number of axioms in the generated ontology.")
    signature: List[str] = Field(..., description="Signature the uniform interpolant is computed for.")
    goal_depth: int = Field(..., description="Depth of the goal trees entailed to be in B.")


def counter_files(n: int) -> Tuple[str, CounterManifest]:
    """DSL text and manifest of the ``n``-bit counter."""
    ontology, sigma = counter_ontology(n)
    text = render_ontology(ontology, header=[f"counter ontology, {n} bits"])
    manifest = CounterManifest(bits=n, axioms=len(ontology), signature=sorted(sigma.names), goal_depth=2 ** n - 1)
    return text, manifest
