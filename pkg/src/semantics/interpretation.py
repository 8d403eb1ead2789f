"""Finite interpretations and their line-based text format.

    domain 3
    concept A: 0 2
    role r: 0-1 1-1
    individual a: 0

Missing concept or role lines mean empty extensions.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

import networkx as nx
from pyparsing import (
    Group, Keyword, ParseBaseException, Regex, StringEnd, Suppress, ZeroOrMore, pyparsing_common,
    python_style_comment,
)

from src.exceptions import DslSyntaxError, WorkbenchError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Interpretation:
    """Domain ``0..size-1`` with concept, role and individual assignments."""

    size: int
    concepts: Mapping[str, FrozenSet[int]] = field(default_factory=dict)
    roles: Mapping[str, FrozenSet[Pair]] = field(default_factory=dict)
    individuals: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise WorkbenchError("interpretations need a nonempty domain")
        domain = set(range(self.size))
        concepts = {name: frozenset(ext) for name, ext in self.concepts.items()}
        roles = {name: frozenset((int(a), int(b)) for a, b in ext) for name, ext in self.roles.items()}
        for name, ext in concepts.items():
            if not ext <= domain:
                raise WorkbenchError(f"concept {name} mentions elements outside the domain")
        for name, ext in roles.items():
            if any(a not in domain or b not in domain for a, b in ext):
                raise WorkbenchError(f"role {name} mentions elements outside the domain")
        for name, element in self.individuals.items():
            if element not in domain:
                raise WorkbenchError(f"individual {name} is assigned outside the domain")
        object.__setattr__(self, "concepts", concepts)
        object.__setattr__(self, "roles", roles)
        object.__setattr__(self, "individuals", dict(self.individuals))

    @property
    def domain(self) -> range:
        return range(self.size)

    def extension(self, name: str) -> FrozenSet[int]:
        return self.concepts.get(name, frozenset())

    def successors(self, role: str, element: int) -> FrozenSet[int]:
        return frozenset(b for a, b in self.roles.get(role, ()) if a == element)

    def graph(self) -> nx.MultiDiGraph:
        """Labelled-graph view: nodes carry concept names, edge keys are roles."""
        graph = nx.MultiDiGraph()
        for element in self.domain:
            graph.add_node(element, concepts=frozenset(name for name, ext in self.concepts.items()
                                                       if element in ext))
        for role, pairs in self.roles.items():
            for source, target in pairs:
                graph.add_edge(source, target, key=role)
        return graph


def _build_grammar():
    integer = pyparsing_common.integer
    name = Regex(r"[A-Za-z][A-Za-z0-9_]*")
    pair = Group(integer + Suppress("-") + integer)
    domain_line = Keyword("domain") + integer
    concept_line = Group(Keyword("concept") + name + Suppress(":") + Group(ZeroOrMore(integer)))
    role_line = Group(Keyword("role") + name + Suppress(":") + Group(ZeroOrMore(pair)))
    individual_line = Group(Keyword("individual") + name + Suppress(":") + integer)
    body = ZeroOrMore(concept_line | role_line | individual_line)
    grammar = domain_line + body + StringEnd()
    grammar.ignore(python_style_comment)
    return grammar


_GRAMMAR = _build_grammar()


def parse_interpretation(text: str) -> Interpretation:
    try:
        tokens = _GRAMMAR.parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise DslSyntaxError("malformed interpretation", line=exc.lineno, column=exc.col) from exc
    size = tokens[1]
    concepts: Dict[str, FrozenSet[int]] = {}
    roles: Dict[str, FrozenSet[Pair]] = {}
    individuals: Dict[str, int] = {}
    for line in tokens[2:]:
        kind, name = line[0], line[1]
        if kind == "concept":
            concepts[name] = frozenset(line[2])
        elif kind == "role":
            roles[name] = frozenset((a, b) for a, b in line[2])
        else:
            individuals[name] = line[2]
    return Interpretation(size, concepts, roles, individuals)


def render_interpretation(interpretation: Interpretation) -> str:
    lines = [f"domain {interpretation.size}"]
    for name in sorted(interpretation.concepts):
        members = " ".join(str(e) for e in sorted(interpretation.concepts[name]))
        lines.append(f"concept {name}: {members}".rstrip())
    for name in sorted(interpretation.roles):
        pairs = " ".join(f"{a}-{b}" for a, b in sorted(interpretation.roles[name]))
        lines.append(f"role {name}: {pairs}".rstrip())
    for name in sorted(interpretation.individuals):
        lines.append(f"individual {name}: {interpretation.individuals[name]}")
    return "\n".join(lines) + "\n"


def restrict(interpretation: Interpretation, names: Iterable[str]) -> Interpretation:
    """Drop every assignment outside ``names``."""
    names = set(names)
    return Interpretation(
        interpretation.size,
        {n: e for n, e in interpretation.concepts.items() if n in names},
        {n: e for n, e in interpretation.roles.items() if n in names},
        {n: e for n, e in interpretation.individuals.items() if n in names},
    )
