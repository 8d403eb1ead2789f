"""Indexed closures and types stored as bitmasks over them."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from src.syntax.concepts import Concept, Exists, Forall, Nominal, Not
from src.syntax.operations import collapse_double_negation, positive_representatives
from src.syntax.render import render_concept

Literal = Tuple[int, bool]


class ClosureIndex:
    """Positive representatives of a closure, each with a bit position."""

    def __init__(self, gamma: Iterable[Concept]):
        self.gamma: FrozenSet[Concept] = frozenset(gamma)
        self.representatives: Tuple[Concept, ...] = tuple(
            sorted(positive_representatives(self.gamma), key=lambda c: (render_concept(c), repr(c)))
        )
        self.index: Dict[Concept, int] = {c: i for i, c in enumerate(self.representatives)}
        self._nominals = [(i, c.individual) for i, c in enumerate(self.representatives) if isinstance(c, Nominal)]

    def __len__(self) -> int:
        return len(self.representatives)

    def __contains__(self, concept: Concept) -> bool:
        concept = collapse_double_negation(concept)
        positive = concept.child if isinstance(concept, Not) else concept
        return positive in self.index

    def literal(self, concept: Concept) -> Literal:
        """``(bit, polarity)`` of a closure member."""
        concept = collapse_double_negation(concept)
        if isinstance(concept, Not):
            return self.index[concept.child], False
        return self.index[concept], True

    def restrictions(self) -> Iterator[Tuple[int, Concept]]:
        for i, concept in enumerate(self.representatives):
            if isinstance(concept, (Exists, Forall)):
                yield i, concept

    def nominals(self) -> List[Tuple[int, str]]:
        return list(self._nominals)


@dataclass(frozen=True)
class TypeRecord:
    """A type: the set of closure members that hold, as a bitmask over representatives."""

    mask: int
    closure: ClosureIndex = field(compare=False, hash=False, repr=False)

    def has(self, literal: Literal) -> bool:
        bit, polarity = literal
        return bool((self.mask >> bit) & 1) == polarity

    def __contains__(self, concept: Concept) -> bool:
        return self.has(self.closure.literal(concept))

    def members(self) -> List[Concept]:
        result = []
        for i, concept in enumerate(self.closure.representatives):
            result.append(concept if (self.mask >> i) & 1 else Not(concept))
        return result

    def nominal_names(self) -> FrozenSet[str]:
        return frozenset(name for i, name in self.closure.nominals() if (self.mask >> i) & 1)
