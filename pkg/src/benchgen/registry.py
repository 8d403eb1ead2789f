"""Built-in example ontologies, concept pairs and definitions with their expected artifacts."""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from src.config import Config
from src.exceptions import NotFoundError
from src.reasoner.entailment import entails_ontology, subsumes
from src.syntax.concepts import And, Concept, Ontology, Signature
from src.syntax.operations import map_ontology, signature, unroll
from src.syntax.parser import parse_concept, parse_ontology

logger = logging.getLogger(__name__)


class ExampleKind(str, Enum):
    ONTOLOGY = "ontology"
    PAIR = "pair"
    DEFINITION = "definition"


@dataclass(frozen=True)
class Example:
    """One registry entry.

    ``ontology`` examples may carry an expected uniform interpolant for
    ``signature``. ``pair`` examples carry ``lhs [= rhs`` and possibly an
    expected interpolant. ``definition`` examples use ``lhs`` as context and
    ``rhs`` as the target of an expected explicit definition.
    """

    name: str
    kind: ExampleKind
    source: str
    note: str
    signature: Optional[Signature] = None
    expected: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None

    @property
    def ontology(self) -> Ontology:
        return parse_ontology(self.source)

    def concepts(self) -> Tuple[Concept, Concept]:
        return parse_concept(self.lhs), parse_concept(self.rhs)


def _sig(concepts=(), roles=(), individuals=()) -> Signature:
    return Signature(frozenset(concepts), frozenset(roles), frozenset(individuals))


_EXAMPLES = (
    Example(
        "car", ExampleKind.ONTOLOGY,
        """
        Car [= some hasPart.PrimeMover.
        PrimeMover [= DieselEngine or GasEngine or ElectricMotor.
        Car and some hasPart.ElectricMotor [= ElectricCar.
        """,
        "cars, prime movers and electric cars",
    ),
    Example(
        "uni", ExampleKind.ONTOLOGY,
        """
        Uni [= some hasEnrolled.Grad and some hasEnrolled.Undergrad.
        Grad [= not Undergrad.
        Uni [= not Grad.
        Uni [= not Undergrad.
        """,
        "forgetting Grad keeps a successor that is neither Undergrad nor Uni",
        _sig({"Uni", "Undergrad"}, {"hasEnrolled"}),
        """
        Uni [= not Undergrad.
        Uni [= some hasEnrolled.Undergrad and some hasEnrolled.(not Undergrad and not Uni).
        """,
    ),
    Example(
        "cyclic", ExampleKind.ONTOLOGY,
        "A [= B. B [= some r.B.",
        "no finite uniform interpolant; needs a greatest fixpoint",
        _sig({"A"}, {"r"}),
        "A [= nu X.some r.X.",
    ),
    Example(
        "el-loopfree", ExampleKind.ONTOLOGY,
        """
        A [= some r.B.
        A0 [= some r.(A1 and B).
        E = A1 and B and some r.(A2 and B).
        """,
        "loop free for EL, still without a finite ALC uniform interpolant",
        _sig({"A", "A0", "A1", "E"}, {"r"}),
    ),
    Example(
        "lethe", ExampleKind.ONTOLOGY,
        "A [= some r.(B and C). some r.(C and D) [= E.",
        "resolution with definers; forgetting C",
        _sig({"A", "B", "D", "E"}, {"r"}),
        "A [= some r.B. A and all r.(not B or D) [= E.",
    ),
    Example(
        "doctor", ExampleKind.PAIR, "",
        "a child that is a doctor explains the subsumption",
        _sig({"Doctor"}, {"child"}),
        "some child.Doctor",
        lhs="some child.top and all child.Doctor",
        rhs="some child.(Doctor or Rich)",
    ),
    Example(
        "alco-nominal", ExampleKind.PAIR, "",
        "no ALCO interpolant over {r}; one exists once the individual a is added",
        _sig(roles={"r"}),
        lhs="{a} and some r.{a}",
        rhs="not A or some r.A",
    ),
    Example(
        "family", ExampleKind.DEFINITION,
        """
        Parent = some hasChild.top.
        Parent = Father or Mother.
        Father [= Man.
        Mother [= Woman.
        Man [= not Woman.
        """,
        "Mother is implicitly defined by Woman and hasChild",
        _sig({"Woman"}, {"hasChild"}),
        "Woman and some hasChild.top",
        lhs="top",
        rhs="Mother",
    ),
)


class ExampleRegistry:
    def __init__(self, examples: Tuple[Example, ...]):
        self._examples = {example.name: example for example in examples}

    def get(self, name: str) -> Example:
        try:
            return self._examples[name]
        except KeyError:
            raise NotFoundError(f"unknown example {name!r}; known: {', '.join(self.names())}") from None

    def names(self) -> Tuple[str, ...]:
        return tuple(sorted(self._examples))

    def __iter__(self) -> Iterator[Example]:
        return iter(self._examples[name] for name in self.names())

    def __len__(self) -> int:
        return len(self._examples)

    def __contains__(self, name: str) -> bool:
        return name in self._examples


@lru_cache(maxsize=1)
def builtin_examples() -> ExampleRegistry:
    return ExampleRegistry(_EXAMPLES)


def self_check(example: Example) -> bool:
    """Whether the expected artifact of ``example`` holds under the reasoner."""
    ontology = example.ontology
    if example.lhs is not None:
        example.concepts()
    if example.expected is None:
        return True
    if example.kind is ExampleKind.ONTOLOGY:
        expected = parse_ontology(example.expected)
        if not signature(expected).issubset(example.signature):
            return False
        unrolled = map_ontology(expected, lambda concept: unroll(concept, Config.UNROLL_VERIFY_DEPTH))
        return entails_ontology(ontology, unrolled)
    lhs, rhs = example.concepts()
    expected = parse_concept(example.expected)
    if not signature(expected).issubset(example.signature):
        return False
    if example.kind is ExampleKind.PAIR:
        return subsumes(ontology, lhs, expected) and subsumes(ontology, expected, rhs)
    ok = subsumes(ontology, And((lhs, rhs)), expected) and subsumes(ontology, And((lhs, expected)), rhs)
    logger.debug("Definition %s of %s checked: %s", example.expected, example.rhs, ok)
    return ok
