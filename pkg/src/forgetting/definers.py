"""Definer elimination by Ackermann substitution and its greatest-fixpoint variant."""

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from src.exceptions import DslSyntaxError, PolarityError
from src.forgetting.clauses import DefinerContext, DLClause, LiteralKind
from src.syntax.concepts import (
    BOTTOM, Concept, ConceptInclusion, ConceptName, Not, Nu, Ontology, TOP, Var, conjunction, disjunction,
    subconcepts,
)
from src.syntax.operations import signature, substitute_names, unroll
from src.syntax.simplify import simplify_ontology

logger = logging.getLogger(__name__)

_POLICY_PATTERN = re.compile(r"^(fixpoint|aux|approx:(\d+))$")


class PolicyKind(str, Enum):
    FIXPOINT = "fixpoint"
    AUXILIARY = "aux"
    APPROXIMATE = "approx"


@dataclass(frozen=True)
class Policy:
    """What to do with definers that end up defined in terms of themselves."""

    kind: PolicyKind = PolicyKind.FIXPOINT
    depth: int = 0

    @classmethod
    def parse(cls, text: str) -> "Policy":
        match = _POLICY_PATTERN.match(text.strip())
        if match is None:
            raise DslSyntaxError(f"unknown policy {text!r}; expected fixpoint, aux or approx:<k>", token=text)
        if match.group(2) is not None:
            return cls(PolicyKind.APPROXIMATE, int(match.group(2)))
        return cls(PolicyKind(match.group(1)))

    def __str__(self) -> str:
        if self.kind == PolicyKind.APPROXIMATE:
            return f"approx:{self.depth}"
        return self.kind.value


FIXPOINT = Policy()


@dataclass(frozen=True)
class UIResult:
    ontology: Ontology
    used_fixpoints: bool
    auxiliary_names: FrozenSet[str] = field(default_factory=frozenset)
    policy: Policy = FIXPOINT

    def header(self) -> List[str]:
        lines = [f"policy: {self.policy}"]
        if self.auxiliary_names:
            lines.append(f"auxiliary names: {' '.join(sorted(self.auxiliary_names))}")
        return lines


def _mentions(concept: Concept, name: str) -> bool:
    return any(isinstance(sub, ConceptName) and sub.name == name for sub in subconcepts(concept))


def _check_polarity(concept: Concept, definers: FrozenSet[str]) -> None:
    for sub in subconcepts(concept):
        if isinstance(sub, Not) and isinstance(sub.child, ConceptName) and sub.child.name in definers:
            raise PolarityError(f"definer {sub.child.name} occurs negatively outside its definition")


def _variables() -> Iterable[str]:
    yield "X"
    counter = 1
    while True:
        yield f"X{counter}"
        counter += 1


def _split(clauses: Iterable[DLClause], context: DefinerContext) -> Tuple[Dict[str, List[Concept]],
                                                                            List[ConceptInclusion]]:
    bodies: Dict[str, List[Concept]] = {}
    axioms: List[ConceptInclusion] = []
    for clause in sorted(clauses, key=DLClause.sort_key):
        definer = context.negative_definer(clause)
        if definer is not None:
            rest = [literal.to_concept() for literal in clause if literal.name != definer
                    or literal.kind != LiteralKind.NEG]
            bodies.setdefault(definer, []).append(disjunction(rest))
            continue
        negative = [ConceptName(literal.name) for literal in clause if literal.kind == LiteralKind.NEG]
        rest = [literal.to_concept() for literal in clause if literal.kind != LiteralKind.NEG]
        axioms.append(ConceptInclusion(conjunction(negative) if negative else TOP,
                                       disjunction(rest) if rest else BOTTOM))
    return bodies, axioms


def _order(definers: Set[str], definitions: Dict[str, Concept]) -> List[str]:
    """Definers with their dependencies first, strongly connected groups together."""
    graph = nx.DiGraph()
    graph.add_nodes_from(definers)
    for definer in definers:
        for other in definers:
            if _mentions(definitions[definer], other):
                graph.add_edge(definer, other)
    condensed = nx.condensation(graph)
    order: List[str] = []
    for component in reversed(list(nx.lexicographical_topological_sort(
            condensed, key=lambda node: min(condensed.nodes[node]["members"])))):
        order.extend(sorted(condensed.nodes[component]["members"]))
    return order


def definer_elimination(clauses: Iterable[DLClause], context: DefinerContext,
                        policy: Policy = FIXPOINT) -> UIResult:
    """Replace every definer by its definition and read the clauses back as inclusions.

    All clauses with ``not D`` form ``D [= C``. When ``D`` does not occur in
    ``C`` it is replaced by ``C`` everywhere; otherwise by ``nu X.C[D := X]``,
    by a fresh ``D_def`` name with ``D_def [= C[D := D_def]`` (aux), or by the
    fixpoint unrolled ``depth`` times (approx).
    """
    clauses = list(clauses)
    bodies, axioms = _split(clauses, context)
    occurring = {literal.name for clause in clauses for literal in clause.literals
                 if context.is_definer(literal.name)}
    definitions: Dict[str, Concept] = {definer: conjunction(bodies.get(definer, ())) for definer in occurring}
    definer_names = frozenset(occurring)
    for concept in list(definitions.values()) + [axiom.rhs for axiom in axioms]:
        _check_polarity(concept, definer_names)

    taken = set(signature(Ontology(tuple(axioms))).names) | set(signature(list(definitions.values())).names)
    variables = (variable for variable in _variables() if variable not in taken)
    auxiliary: List[ConceptInclusion] = []
    auxiliary_names: Set[str] = set()
    for definer in _order(set(occurring), definitions):
        body = definitions.pop(definer)
        if not _mentions(body, definer):
            value = body
        elif policy.kind == PolicyKind.AUXILIARY:
            name = context.auxiliary_name(definer, taken | auxiliary_names)
            auxiliary_names.add(name)
            value = ConceptName(name)
            auxiliary.append(ConceptInclusion(value, substitute_names(body, {definer: value})))
        else:
            variable = next(variables)
            value = Nu(variable, substitute_names(body, {definer: Var(variable)}))
        replace = {definer: value}
        definitions = {other: substitute_names(concept, replace) for other, concept in definitions.items()}
        axioms = [ConceptInclusion(axiom.lhs, substitute_names(axiom.rhs, replace)) for axiom in axioms]
        auxiliary = [ConceptInclusion(axiom.lhs, substitute_names(axiom.rhs, replace)) for axiom in auxiliary]
        logger.debug("Eliminated definer %s%s", definer, " (cyclic)" if value is not body else "")

    result = axioms + auxiliary
    if policy.kind == PolicyKind.APPROXIMATE:
        result = [ConceptInclusion(axiom.lhs, unroll(axiom.rhs, policy.depth)) for axiom in result]
    ontology = simplify_ontology(Ontology(tuple(result)))
    return UIResult(ontology, ontology.has_fixpoints(), frozenset(auxiliary_names), policy)
