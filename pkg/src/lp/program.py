"""Propositional programs with disjunctive heads, default negation and double negation."""

from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import FrozenSet, Iterable, Iterator, NamedTuple, Tuple

Atoms = FrozenSet[str]


@dataclass(frozen=True)
class LPRule:
    """``head <- pbody, not nbody, not not nnbody``; an empty head is a constraint."""

    head: Atoms = frozenset()
    pbody: Atoms = frozenset()
    nbody: Atoms = frozenset()
    nnbody: Atoms = frozenset()

    def __post_init__(self):
        for name in ("head", "pbody", "nbody", "nnbody"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def atoms(self) -> Atoms:
        return self.head | self.pbody | self.nbody | self.nnbody

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not (self.pbody or self.nbody or self.nnbody)

    def body_holds(self, interpretation: Atoms) -> bool:
        """Classical truth of the body, default negation read as classical negation."""
        return (self.pbody <= interpretation and not self.nbody & interpretation
                and self.nnbody <= interpretation)

    def holds(self, interpretation: Atoms) -> bool:
        return not self.body_holds(interpretation) or bool(self.head & interpretation)

    def holds_ht(self, here: Atoms, there: Atoms) -> bool:
        """Satisfaction at the HT-interpretation ``<here, there>``."""
        if not self.holds(there):
            return False
        if self.nbody & there or not self.nnbody <= there:
            return True
        return not self.pbody <= here or bool(self.head & here)


class HTPair(NamedTuple):
    here: Atoms
    there: Atoms


@dataclass(frozen=True)
class LPProgram:
    """A finite list of rules over ``atoms``, which may declare atoms no rule mentions."""

    rules: Tuple[LPRule, ...] = ()
    declared: Atoms = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "declared", frozenset(self.declared))

    @property
    def atoms(self) -> Atoms:
        return self.declared.union(*(rule.atoms for rule in self.rules))

    def __iter__(self) -> Iterator[LPRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def union(self, other: "LPProgram") -> "LPProgram":
        rules = self.rules + tuple(rule for rule in other.rules if rule not in self.rules)
        return LPProgram(rules, self.declared | other.declared)

    def over(self, universe: Iterable[str]) -> "LPProgram":
        """The same rules with ``universe`` added to the declared atoms."""
        return LPProgram(self.rules, self.declared | frozenset(universe))


EMPTY_PROGRAM = LPProgram()


def facts(atoms: Iterable[str]) -> LPProgram:
    return LPProgram(tuple(LPRule(head=frozenset({atom})) for atom in sorted(atoms)))


def subsets(atoms: Iterable[str]) -> Iterator[Atoms]:
    """All subsets of ``atoms`` in size order, deterministic for a given set."""
    ordered = sorted(atoms)
    return (frozenset(combo) for combo in chain.from_iterable(
        combinations(ordered, size) for size in range(len(ordered) + 1)))
