"""DL clauses over literals ``A | not A | some r.D | all r.D`` and the definer bookkeeping."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from src.exceptions import PolarityError
from src.syntax.concepts import (
    BOTTOM, Concept, ConceptInclusion, ConceptName, Exists, Forall, Not, Ontology, TOP, conjunction,
    disjunction,
)
from src.syntax.operations import fresh_name


class LiteralKind(str, Enum):
    POS = "pos"
    NEG = "neg"
    EXISTS = "exists"
    FORALL = "forall"


@dataclass(frozen=True, order=True)
class Literal:
    kind: LiteralKind
    name: str
    role: str = ""

    @classmethod
    def pos(cls, name: str) -> "Literal":
        return cls(LiteralKind.POS, name)

    @classmethod
    def neg(cls, name: str) -> "Literal":
        return cls(LiteralKind.NEG, name)

    @classmethod
    def exists(cls, role: str, definer: str) -> "Literal":
        return cls(LiteralKind.EXISTS, definer, role)

    @classmethod
    def forall(cls, role: str, definer: str) -> "Literal":
        return cls(LiteralKind.FORALL, definer, role)

    @property
    def is_restriction(self) -> bool:
        return self.kind in (LiteralKind.EXISTS, LiteralKind.FORALL)

    def complement(self) -> "Literal":
        if self.kind == LiteralKind.POS:
            return Literal.neg(self.name)
        if self.kind == LiteralKind.NEG:
            return Literal.pos(self.name)
        raise ValueError("only concept literals have a complement")

    def with_target(self, definer: str) -> "Literal":
        return Literal(self.kind, definer, self.role)

    def to_concept(self) -> Concept:
        if self.kind == LiteralKind.POS:
            return ConceptName(self.name)
        if self.kind == LiteralKind.NEG:
            return Not(ConceptName(self.name))
        if self.kind == LiteralKind.EXISTS:
            return Exists(self.role, ConceptName(self.name))
        return Forall(self.role, ConceptName(self.name))

    def render(self) -> str:
        if self.kind == LiteralKind.POS:
            return self.name
        if self.kind == LiteralKind.NEG:
            return f"not {self.name}"
        quantifier = "some" if self.kind == LiteralKind.EXISTS else "all"
        return f"{quantifier} {self.role}.{self.name}"


@dataclass(frozen=True)
class DLClause:
    """Globally interpreted disjunction of literals."""

    literals: FrozenSet[Literal]

    @classmethod
    def of(cls, *literals: Literal) -> "DLClause":
        return cls(frozenset(literals))

    def __iter__(self):
        return iter(sorted(self.literals))

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, literal: Literal) -> bool:
        return literal in self.literals

    def is_tautology(self) -> bool:
        return any(literal.kind == LiteralKind.POS and Literal.neg(literal.name) in self.literals
                   for literal in self.literals)

    def without(self, *literals: Literal) -> FrozenSet[Literal]:
        return self.literals - set(literals)

    def concept_names(self) -> FrozenSet[str]:
        return frozenset(literal.name for literal in self.literals if not literal.is_restriction)

    def roles(self) -> FrozenSet[str]:
        return frozenset(literal.role for literal in self.literals if literal.is_restriction)

    def mentions(self, name: str) -> bool:
        return any(literal.name == name or literal.role == name for literal in self.literals)

    def sort_key(self) -> Tuple:
        return (len(self.literals), sorted(self.literals))

    def render(self) -> str:
        if not self.literals:
            return "bot"
        return " or ".join(literal.render() for literal in self)

    def to_concept(self) -> Concept:
        return disjunction(literal.to_concept() for literal in self)


class DefinerContext:
    """Fresh definer names, their base sets and the reuse memo.

    A definer created from a filler has itself as its only base; a combined
    definer stands for the conjunction of its base definers and is looked up
    by that base set before a new one is made.
    """

    def __init__(self, reserved: Iterable[str] = ()):
        self.reserved: Set[str] = set(reserved)
        self.base_of: Dict[str, FrozenSet[str]] = {}
        self.origin: Dict[str, str] = {}
        self.reuse_hits = 0
        self.derived = 0
        self._by_base: Dict[FrozenSet[str], str] = {}
        self._by_filler: Dict[str, str] = {}
        self._counter = 0

    @property
    def definers(self) -> FrozenSet[str]:
        return frozenset(self.base_of)

    def is_definer(self, name: str) -> bool:
        return name in self.base_of

    def _fresh(self) -> str:
        taken = self.reserved | set(self.base_of)
        while True:
            self._counter += 1
            name = f"D{self._counter}"
            if name not in taken:
                return name

    def for_filler(self, key: str, origin: str) -> Tuple[str, bool]:
        """Definer for a filler, identified by its canonical key; True when newly created."""
        if key in self._by_filler:
            self.reuse_hits += 1
            return self._by_filler[key], False
        name = self._fresh()
        self.base_of[name] = frozenset({name})
        self._by_base[frozenset({name})] = name
        self._by_filler[key] = name
        self.origin[name] = origin
        return name, True

    def combine(self, first: str, second: str) -> Tuple[str, bool]:
        """Definer for ``first and second``; True when newly created."""
        base = self.base_of[first] | self.base_of[second]
        if base in self._by_base:
            self.reuse_hits += 1
            return self._by_base[base], False
        name = self._fresh()
        self.base_of[name] = base
        self._by_base[base] = name
        self.origin[name] = f"{first} and {second}"
        return name, True

    def auxiliary_name(self, definer: str, taken: Iterable[str]) -> str:
        return fresh_name(definer, self.reserved | set(self.base_of) | set(taken), suffix="def")

    def negative_definers(self, clause: DLClause) -> List[str]:
        return sorted(literal.name for literal in clause.literals
                      if literal.kind == LiteralKind.NEG and literal.name in self.base_of)

    def negative_definer(self, clause: DLClause) -> Optional[str]:
        found = self.negative_definers(clause)
        if len(found) > 1:
            raise PolarityError(f"clause '{clause.render()}' has more than one negative definer")
        return found[0] if found else None

    def admissible(self, clause: DLClause) -> bool:
        return len(self.negative_definers(clause)) <= 1


def clause_to_inclusion(clause: DLClause) -> ConceptInclusion:
    """Read a clause back as ``conjunction of negated names [= rest``."""
    negative = [literal for literal in clause if literal.kind == LiteralKind.NEG]
    rest = [literal for literal in clause if literal.kind != LiteralKind.NEG]
    lhs = conjunction(ConceptName(literal.name) for literal in negative) if negative else TOP
    rhs = disjunction(literal.to_concept() for literal in rest) if rest else BOTTOM
    return ConceptInclusion(lhs, rhs)


def clauses_to_ontology(clauses: Iterable[DLClause]) -> Ontology:
    return Ontology(tuple(clause_to_inclusion(clause) for clause in sorted(clauses, key=DLClause.sort_key)))


def render_clauses(clauses: Iterable[DLClause]) -> str:
    return "\n".join(clause.render() for clause in sorted(clauses, key=DLClause.sort_key))
