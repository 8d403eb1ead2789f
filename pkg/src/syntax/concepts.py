"""Concept, inclusion, ontology and signature values.

Every value is an immutable, hashable dataclass.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, Tuple, Union

from src.exceptions import WorkbenchError


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class ConceptName:
    name: str


@dataclass(frozen=True)
class Nominal:
    individual: str


@dataclass(frozen=True)
class Not:
    child: "Concept"


@dataclass(frozen=True)
class And:
    children: Tuple["Concept", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("And needs at least two children; use conjunction() instead")


@dataclass(frozen=True)
class Or:
    children: Tuple["Concept", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Or needs at least two children; use disjunction() instead")


@dataclass(frozen=True)
class Exists:
    role: str
    child: "Concept"


@dataclass(frozen=True)
class Forall:
    role: str
    child: "Concept"


@dataclass(frozen=True)
class Nu:
    variable: str
    child: "Concept"


@dataclass(frozen=True)
class Var:
    variable: str


Concept = Union[Top, Bottom, ConceptName, Nominal, Not, And, Or, Exists, Forall, Nu, Var]
Restriction = (Exists, Forall)

TOP = Top()
BOTTOM = Bottom()


def conjunction(items: Iterable[Concept]) -> Concept:
    """Build an n-ary conjunction; empty means top."""
    items = tuple(items)
    if not items:
        return TOP
    if len(items) == 1:
        return items[0]
    return And(items)


def disjunction(items: Iterable[Concept]) -> Concept:
    """Build an n-ary disjunction; empty means bottom."""
    items = tuple(items)
    if not items:
        return BOTTOM
    if len(items) == 1:
        return items[0]
    return Or(items)


def implies(lhs: Concept, rhs: Concept) -> Concept:
    return Or((Not(lhs), rhs))


def children_of(concept: Concept) -> Tuple[Concept, ...]:
    if isinstance(concept, (And, Or)):
        return concept.children
    if isinstance(concept, (Not, Exists, Forall, Nu)):
        return (concept.child,)
    return ()


def subconcepts(concept: Concept) -> Iterator[Concept]:
    """Yield every subconcept, the concept itself first."""
    stack = [concept]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children_of(current)))


def has_fixpoints(concept: Concept) -> bool:
    return any(isinstance(sub, (Nu, Var)) for sub in subconcepts(concept))


def has_nominals(concept: Concept) -> bool:
    return any(isinstance(sub, Nominal) for sub in subconcepts(concept))


@dataclass(frozen=True)
class ConceptInclusion:
    lhs: Concept
    rhs: Concept

    def concepts(self) -> Tuple[Concept, Concept]:
        return (self.lhs, self.rhs)


def canonical_key(concept: Concept) -> str:
    """Structural key that ignores the order of And/Or children."""
    if isinstance(concept, Top):
        return "T"
    if isinstance(concept, Bottom):
        return "F"
    if isinstance(concept, ConceptName):
        return f"c:{concept.name}"
    if isinstance(concept, Nominal):
        return f"i:{concept.individual}"
    if isinstance(concept, Var):
        return f"v:{concept.variable}"
    if isinstance(concept, Not):
        return f"!({canonical_key(concept.child)})"
    if isinstance(concept, (And, Or)):
        tag = "&" if isinstance(concept, And) else "|"
        return f"{tag}[{','.join(sorted(canonical_key(child) for child in concept.children))}]"
    if isinstance(concept, Exists):
        return f"E{concept.role}.({canonical_key(concept.child)})"
    if isinstance(concept, Forall):
        return f"A{concept.role}.({canonical_key(concept.child)})"
    if isinstance(concept, Nu):
        return f"nu{concept.variable}.({canonical_key(concept.child)})"
    raise TypeError(f"Unknown concept node {concept!r}")


@dataclass(frozen=True)
class Ontology:
    """Finite ordered set of concept inclusions; duplicates are stored once."""

    axioms: Tuple[ConceptInclusion, ...] = ()

    def __post_init__(self):
        seen = set()
        unique = []
        for axiom in self.axioms:
            key = (canonical_key(axiom.lhs), canonical_key(axiom.rhs))
            if key not in seen:
                seen.add(key)
                unique.append(axiom)
        object.__setattr__(self, "axioms", tuple(unique))

    def __iter__(self) -> Iterator[ConceptInclusion]:
        return iter(self.axioms)

    def __len__(self) -> int:
        return len(self.axioms)

    def union(self, *others: "Ontology") -> "Ontology":
        axioms = list(self.axioms)
        for other in others:
            axioms.extend(other.axioms)
        return Ontology(tuple(axioms))

    def concepts(self) -> Iterator[Concept]:
        for axiom in self.axioms:
            yield axiom.lhs
            yield axiom.rhs

    def has_fixpoints(self) -> bool:
        return any(has_fixpoints(concept) for concept in self.concepts())

    def has_nominals(self) -> bool:
        return any(has_nominals(concept) for concept in self.concepts())


EMPTY_ONTOLOGY = Ontology()


@dataclass(frozen=True)
class Signature:
    """Concept, role and individual names; the three sets are pairwise disjoint."""

    concepts: FrozenSet[str] = field(default_factory=frozenset)
    roles: FrozenSet[str] = field(default_factory=frozenset)
    individuals: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "concepts", frozenset(self.concepts))
        object.__setattr__(self, "roles", frozenset(self.roles))
        object.__setattr__(self, "individuals", frozenset(self.individuals))
        clash = (self.concepts & self.roles) | (self.concepts & self.individuals) | (self.roles & self.individuals)
        if clash:
            raise WorkbenchError(f"Signature kinds overlap on {sorted(clash)}")

    @property
    def names(self) -> FrozenSet[str]:
        return self.concepts | self.roles | self.individuals

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(self.concepts | other.concepts, self.roles | other.roles,
                         self.individuals | other.individuals)

    def __and__(self, other: "Signature") -> "Signature":
        return Signature(self.concepts & other.concepts, self.roles & other.roles,
                         self.individuals & other.individuals)

    def __sub__(self, other: "Signature") -> "Signature":
        return Signature(self.concepts - other.concepts, self.roles - other.roles,
                         self.individuals - other.individuals)

    def issubset(self, other: "Signature") -> bool:
        return (self.concepts <= other.concepts and self.roles <= other.roles
                and self.individuals <= other.individuals)

    def without(self, names: Iterable[str]) -> "Signature":
        names = set(names)
        return Signature(self.concepts - names, self.roles - names, self.individuals - names)

    @classmethod
    def classify(cls, names: Iterable[str], reference: "Signature") -> "Signature":
        """Sort bare names into kinds using a reference signature.

        Names unknown to the reference are treated as concept names.
        """
        concepts, roles, individuals = set(), set(), set()
        for name in names:
            if name in reference.roles:
                roles.add(name)
            elif name in reference.individuals:
                individuals.add(name)
            else:
                concepts.add(name)
        return cls(frozenset(concepts), frozenset(roles), frozenset(individuals))

    def sorted_names(self) -> Tuple[str, ...]:
        return tuple(sorted(self.names))


EMPTY_SIGNATURE = Signature()
