"""Resolution and role propagation on the names being forgotten.

Concept names are eliminated one at a time: purify if the name is pure,
otherwise saturate resolution on it (with role propagation wherever two
definers that both lead to the name meet under the same role), then drop
every clause that still mentions it. Roles are eliminated by saturating
role propagation, removing ``some r.D`` literals with unsatisfiable ``D``
and dropping the clauses that still mention the role.
"""

import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.forgetting.clauses import DefinerContext, DLClause, Literal, LiteralKind, clauses_to_ontology
from src.reasoner.entailment import is_satisfiable
from src.syntax.concepts import ConceptName

logger = logging.getLogger(__name__)


def resolve(first: DLClause, second: DLClause, name: str, context: DefinerContext) -> Optional[DLClause]:
    """Resolvent of ``first`` (with ``name``) and ``second`` (with ``not name``), or None if inadmissible."""
    positive, negative = Literal.pos(name), Literal.neg(name)
    if positive not in first or negative not in second:
        raise PreconditionError(f"resolution on {name} needs {name} in the first and not {name} in the second clause")
    resolvent = DLClause(first.without(positive) | second.without(negative))
    if resolvent.is_tautology() or not context.admissible(resolvent):
        return None
    return resolvent


def propagate(first: DLClause, universal: Literal, second: DLClause, other: Literal,
              context: DefinerContext) -> Optional[DLClause]:
    """``C1 or all r.D1``, ``C2 or Q r.D2`` give ``C1 or C2 or Q r.D12``; None if inadmissible."""
    if (universal.kind != LiteralKind.FORALL or not other.is_restriction or universal.role != other.role
            or universal not in first or other not in second):
        raise PreconditionError("role propagation needs 'all r.D1' in the first and a restriction on r in the second")
    rest = DLClause(first.without(universal) | second.without(other))
    if rest.is_tautology() or not context.admissible(rest):
        return None
    combined, _ = context.combine(universal.name, other.name)
    return DLClause(rest.literals | {other.with_target(combined)})


def infer_step(first: DLClause, second: DLClause, on: str, context: DefinerContext) -> List[DLClause]:
    """All admissible conclusions of one inference between two clauses.

    ``on`` names the concept name to resolve on, or the role to propagate on.
    """
    derived: List[DLClause] = []
    if Literal.pos(on) in first and Literal.neg(on) in second:
        resolvent = resolve(first, second, on, context)
        if resolvent is not None:
            derived.append(resolvent)
        return derived
    universals = [literal for literal in first if literal.kind == LiteralKind.FORALL and literal.role == on]
    others = [literal for literal in second if literal.is_restriction and literal.role == on]
    if not universals or not others:
        raise PreconditionError(f"no inference on {on} between '{first.render()}' and '{second.render()}'")
    for universal in universals:
        for other in others:
            if other.name == universal.name:
                continue
            conclusion = propagate(first, universal, second, other, context)
            if conclusion is not None:
                derived.append(conclusion)
    return derived


class Saturation:
    """Clause set with subsumption deletion and a derived-clause cap."""

    def __init__(self, clauses: Iterable[DLClause], context: DefinerContext, limit: Optional[int] = None):
        self.context = context
        self.limit = Config.MAX_DERIVED_CLAUSES if limit is None else limit
        self.clauses: Set[DLClause] = set()
        for clause in sorted(clauses, key=DLClause.sort_key):
            self.add(clause, count=False)

    def add(self, clause: DLClause, count: bool = True) -> bool:
        if clause.is_tautology():
            return False
        self.context.negative_definer(clause)
        if any(existing.literals <= clause.literals for existing in self.clauses):
            return False
        self.clauses = {existing for existing in self.clauses if not clause.literals < existing.literals}
        self.clauses.add(clause)
        if count:
            self.context.derived += 1
            if self.context.derived > self.limit:
                logger.warning("Saturation gave up after %d derived clauses", self.context.derived)
                raise ResourceLimitError(f"more than {self.limit} derived clauses")
        return True

    def snapshot(self) -> List[DLClause]:
        return sorted(self.clauses, key=DLClause.sort_key)

    def remove_mentioning(self, name: str) -> int:
        before = len(self.clauses)
        self.clauses = {clause for clause in self.clauses if not clause.mentions(name)}
        return before - len(self.clauses)

    def definitions(self) -> Dict[str, List[DLClause]]:
        result: Dict[str, List[DLClause]] = {}
        for clause in self.snapshot():
            definer = self.context.negative_definer(clause)
            if definer is not None:
                result.setdefault(definer, []).append(clause)
        return result

    def inherited(self) -> Iterator[DLClause]:
        """Copies of definer clauses for every combined definer whose base includes that definer."""
        base_of = self.context.base_of
        for clause in self.snapshot():
            definer = self.context.negative_definer(clause)
            if definer is None:
                continue
            for other in sorted(base_of):
                if other != definer and base_of[definer] < base_of[other]:
                    yield DLClause(clause.without(Literal.neg(definer)) | {Literal.neg(other)})

    def saturate(self, rounds) -> None:
        changed = True
        while changed:
            changed = False
            for conclusion in list(rounds()):
                if self.add(conclusion):
                    changed = True


def _definer_graph(saturation: Saturation) -> nx.DiGraph:
    graph = nx.DiGraph()
    for definer, clauses in saturation.definitions().items():
        graph.add_node(definer)
        for clause in clauses:
            for literal in clause.literals:
                if literal.is_restriction:
                    graph.add_edge(definer, literal.name)
    return graph


def _leading_to(saturation: Saturation, name: str) -> FrozenSet[str]:
    """Definers whose definitions mention ``name`` directly or through nested definers."""
    graph = _definer_graph(saturation)
    direct = {definer for definer, clauses in saturation.definitions().items()
              if any(clause.mentions(name) for clause in clauses)}
    result = set(direct)
    for definer in direct:
        result |= nx.ancestors(graph, definer)
    return frozenset(result)


def _restrictions(clauses: List[DLClause], role: Optional[str] = None) -> List[Tuple[DLClause, Literal]]:
    return [(clause, literal) for clause in clauses for literal in clause
            if literal.is_restriction and (role is None or literal.role == role)]


def _concept_rounds(saturation: Saturation, name: str):
    def rounds() -> Iterator[DLClause]:
        yield from saturation.inherited()
        clauses = saturation.snapshot()
        positives = [clause for clause in clauses if Literal.pos(name) in clause]
        negatives = [clause for clause in clauses if Literal.neg(name) in clause]
        for first in positives:
            for second in negatives:
                yield from infer_step(first, second, name, saturation.context)
        relevant = _leading_to(saturation, name)
        restrictions = [(clause, literal) for clause, literal in _restrictions(clauses)
                        if literal.name in relevant]
        for first, universal in restrictions:
            if universal.kind != LiteralKind.FORALL:
                continue
            for second, other in restrictions:
                if second == first or other.role != universal.role or other.name == universal.name:
                    continue
                conclusion = propagate(first, universal, second, other, saturation.context)
                if conclusion is not None:
                    yield conclusion

    return rounds


def _role_rounds(saturation: Saturation, role: str):
    def rounds() -> Iterator[DLClause]:
        yield from saturation.inherited()
        restrictions = _restrictions(saturation.snapshot(), role)
        for first, universal in restrictions:
            if universal.kind != LiteralKind.FORALL:
                continue
            for second, other in restrictions:
                if second == first or other.kind != LiteralKind.EXISTS or other.name == universal.name:
                    continue
                conclusion = propagate(first, universal, second, other, saturation.context)
                if conclusion is not None:
                    yield conclusion

    return rounds


def _polarities(clauses: Iterable[DLClause], name: str) -> Tuple[bool, bool]:
    clauses = list(clauses)
    return (any(Literal.pos(name) in clause for clause in clauses),
            any(Literal.neg(name) in clause for clause in clauses))


def eliminate_concept(saturation: Saturation, name: str) -> None:
    positive, negative = _polarities(saturation.clauses, name)
    if not positive and not negative:
        return
    if positive and negative:
        saturation.saturate(_concept_rounds(saturation, name))
    else:
        logger.debug("Purifying %s (%s only)", name, "positive" if positive else "negative")
    removed = saturation.remove_mentioning(name)
    logger.debug("Eliminated %s; removed %d clauses, %d remain", name, removed, len(saturation.clauses))


def eliminate_role(saturation: Saturation, role: str) -> None:
    if not any(role in clause.roles() for clause in saturation.clauses):
        return
    saturation.saturate(_role_rounds(saturation, role))
    ontology = clauses_to_ontology(saturation.clauses)
    targets = sorted({literal.name for clause in saturation.clauses for literal in clause
                      if literal.kind == LiteralKind.EXISTS and literal.role == role})
    empty = {definer for definer in targets if not is_satisfiable(ontology, ConceptName(definer))}
    if empty:
        logger.debug("Definers %s are unsatisfiable under %s", sorted(empty), role)
        strengthened = []
        for clause in saturation.snapshot():
            dropped = {literal for literal in clause.literals
                       if literal.kind == LiteralKind.EXISTS and literal.role == role and literal.name in empty}
            strengthened.append(DLClause(clause.literals - dropped) if dropped else clause)
        saturation.clauses = set()
        for clause in strengthened:
            saturation.add(clause, count=False)
    removed = saturation.remove_mentioning(role)
    logger.debug("Eliminated role %s; removed %d clauses, %d remain", role, removed, len(saturation.clauses))


def _occurrences(clauses: Iterable[DLClause], name: str) -> int:
    return sum(1 for clause in clauses for literal in clause.literals
               if literal.name == name or literal.role == name)


def eliminate_symbols(clauses: Iterable[DLClause], context: DefinerContext, forget: Iterable[str],
                      limit: Optional[int] = None) -> Tuple[Set[DLClause], DefinerContext]:
    """Eliminate concept and role names from a clause set.

    Concept names go first, fewest occurrences first (ties by name), then
    roles in the same order.
    """
    forget = set(forget)
    clashing = forget & context.definers
    if clashing:
        raise PreconditionError(f"cannot forget definers {sorted(clashing)}")
    saturation = Saturation(clauses, context, limit)
    roles = {name for name in forget if any(name in clause.roles() for clause in saturation.clauses)}
    concepts = forget - roles
    while concepts:
        name = min(concepts, key=lambda n: (_occurrences(saturation.clauses, n), n))
        concepts.discard(name)
        eliminate_concept(saturation, name)
    while roles:
        role = min(roles, key=lambda n: (_occurrences(saturation.clauses, n), n))
        roles.discard(role)
        eliminate_role(saturation, role)
    return set(saturation.clauses), context
