"""Structural utilities over concepts and ontologies."""

from typing import Dict, FrozenSet, Iterable, Mapping, Set, Tuple, Union

from src.exceptions import NameCollisionError, PreconditionError
from src.syntax.concepts import (
    And, BOTTOM, Bottom, Concept, ConceptInclusion, ConceptName, Exists, Forall, Nominal, Not, Nu,
    Ontology, Or, Signature, TOP, Top, Var, children_of, has_fixpoints, subconcepts,
)

Source = Union[Ontology, Concept, ConceptInclusion]


def map_concept(concept: Concept, fn) -> Concept:
    """Rebuild ``concept`` bottom-up, applying ``fn`` to every rebuilt node."""
    if isinstance(concept, Not):
        return fn(Not(map_concept(concept.child, fn)))
    if isinstance(concept, And):
        return fn(And(tuple(map_concept(child, fn) for child in concept.children)))
    if isinstance(concept, Or):
        return fn(Or(tuple(map_concept(child, fn) for child in concept.children)))
    if isinstance(concept, Exists):
        return fn(Exists(concept.role, map_concept(concept.child, fn)))
    if isinstance(concept, Forall):
        return fn(Forall(concept.role, map_concept(concept.child, fn)))
    if isinstance(concept, Nu):
        return fn(Nu(concept.variable, map_concept(concept.child, fn)))
    return fn(concept)


def map_ontology(ontology: Ontology, fn) -> Ontology:
    return Ontology(tuple(ConceptInclusion(fn(axiom.lhs), fn(axiom.rhs)) for axiom in ontology))


def nnf(concept: Concept) -> Concept:
    """Negation normal form: Not only above concept names and nominals."""
    if isinstance(concept, Not):
        return negate(concept.child)
    if isinstance(concept, And):
        return And(tuple(nnf(child) for child in concept.children))
    if isinstance(concept, Or):
        return Or(tuple(nnf(child) for child in concept.children))
    if isinstance(concept, Exists):
        return Exists(concept.role, nnf(concept.child))
    if isinstance(concept, Forall):
        return Forall(concept.role, nnf(concept.child))
    if isinstance(concept, Nu):
        return Nu(concept.variable, nnf(concept.child))
    return concept


def negate(concept: Concept) -> Concept:
    """NNF of the negation of ``concept``."""
    if isinstance(concept, Top):
        return BOTTOM
    if isinstance(concept, Bottom):
        return TOP
    if isinstance(concept, (ConceptName, Nominal)):
        return Not(concept)
    if isinstance(concept, Not):
        return nnf(concept.child)
    if isinstance(concept, And):
        return Or(tuple(negate(child) for child in concept.children))
    if isinstance(concept, Or):
        return And(tuple(negate(child) for child in concept.children))
    if isinstance(concept, Exists):
        return Forall(concept.role, negate(concept.child))
    if isinstance(concept, Forall):
        return Exists(concept.role, negate(concept.child))
    raise PreconditionError("negation normal form is only defined for closed, fixpoint-free negations")


def single_negation(concept: Concept) -> Concept:
    """``not C`` with double negation collapsed."""
    if isinstance(concept, Not):
        return concept.child
    return Not(concept)


def collapse_double_negation(concept: Concept) -> Concept:
    return map_concept(concept, lambda node: node.child.child
                       if isinstance(node, Not) and isinstance(node.child, Not) else node)


def _concepts_of(source: Source) -> Iterable[Concept]:
    if isinstance(source, Ontology):
        return list(source.concepts())
    if isinstance(source, ConceptInclusion):
        return [source.lhs, source.rhs]
    return [source]


def closure_gamma(sources: Iterable[Source]) -> FrozenSet[Concept]:
    """All subconcepts of the sources, closed under single negation."""
    members: Set[Concept] = set()
    for source in sources:
        for concept in _concepts_of(source):
            if has_fixpoints(concept):
                raise PreconditionError("closure is only defined for fixpoint-free concepts")
            for sub in subconcepts(collapse_double_negation(concept)):
                members.add(sub)
                members.add(single_negation(sub))
    return frozenset(members)


def positive_representatives(gamma: Iterable[Concept]) -> FrozenSet[Concept]:
    return frozenset(concept.child if isinstance(concept, Not) else concept for concept in gamma)


def signature(source: Union[Source, Iterable[Source]]) -> Signature:
    """Names occurring in an ontology, inclusion, concept or a list of those."""
    if isinstance(source, (Ontology, ConceptInclusion)) or not isinstance(source, (list, tuple)):
        sources = [source]
    else:
        sources = list(source)
    concepts, roles, individuals = set(), set(), set()
    for item in sources:
        for concept in _concepts_of(item):
            for sub in subconcepts(concept):
                if isinstance(sub, ConceptName):
                    concepts.add(sub.name)
                elif isinstance(sub, Nominal):
                    individuals.add(sub.individual)
                elif isinstance(sub, (Exists, Forall)):
                    roles.add(sub.role)
    return Signature(frozenset(concepts), frozenset(roles), frozenset(individuals))


def role_depth(concept: Concept) -> int:
    if isinstance(concept, (Exists, Forall)):
        return 1 + role_depth(concept.child)
    if isinstance(concept, (And, Or)):
        return max(role_depth(child) for child in concept.children)
    if isinstance(concept, (Not, Nu)):
        return role_depth(concept.child)
    return 0


def sig_and_depth(source: Source) -> Tuple[Signature, int]:
    depth = max((role_depth(concept) for concept in _concepts_of(source)), default=0)
    return signature(source), depth


def rename_symbols(concept: Concept, mapping: Mapping[str, str]) -> Concept:
    """Uniformly rename concept, role and individual names."""

    def rename(node: Concept) -> Concept:
        if isinstance(node, ConceptName) and node.name in mapping:
            return ConceptName(mapping[node.name])
        if isinstance(node, Nominal) and node.individual in mapping:
            return Nominal(mapping[node.individual])
        if isinstance(node, Exists) and node.role in mapping:
            return Exists(mapping[node.role], node.child)
        if isinstance(node, Forall) and node.role in mapping:
            return Forall(mapping[node.role], node.child)
        return node

    return map_concept(concept, rename)


def fresh_name(base: str, taken: Set[str], suffix: str = "", strict: bool = False) -> str:
    """``base_suffix``, or with a counter appended while the name is taken."""
    candidate = f"{base}_{suffix}" if suffix else base
    if candidate not in taken:
        return candidate
    if strict:
        raise NameCollisionError(f"fresh name {candidate} already occurs")
    counter = 1
    while f"{candidate}{counter}" in taken:
        counter += 1
    return f"{candidate}{counter}"


def rename_outside(source: Union[Ontology, Concept], keep: Signature, suffix: str, strict: bool = True,
                   taken: Iterable[str] = ()) -> Tuple[Union[Ontology, Concept], Dict[str, str]]:
    """Rename every symbol outside ``keep`` to ``name_suffix``.

    With ``strict`` a colliding fresh name raises; otherwise a counter is
    appended. ``taken`` lists further names the fresh ones must avoid.
    """
    sig = signature(source)
    used = set(sig.names) | set(taken)
    mapping: Dict[str, str] = {}
    for name in sorted(sig.names - keep.names):
        new = fresh_name(name, used, suffix, strict=strict)
        used.add(new)
        mapping[name] = new
    if isinstance(source, Ontology):
        return map_ontology(source, lambda c: rename_symbols(c, mapping)), mapping
    return rename_symbols(source, mapping), mapping


def substitute_names(concept: Concept, definitions: Mapping[str, Concept]) -> Concept:
    """Replace concept names by concepts (Ackermann substitution)."""
    return map_concept(concept, lambda node: definitions.get(node.name, node)
                       if isinstance(node, ConceptName) else node)


def substitute_var(concept: Concept, variable: str, replacement: Concept) -> Concept:
    """Replace free occurrences of ``variable``."""
    if isinstance(concept, Var):
        return replacement if concept.variable == variable else concept
    if isinstance(concept, Nu):
        if concept.variable == variable:
            return concept
        return Nu(concept.variable, substitute_var(concept.child, variable, replacement))
    if isinstance(concept, Not):
        return Not(substitute_var(concept.child, variable, replacement))
    if isinstance(concept, And):
        return And(tuple(substitute_var(child, variable, replacement) for child in concept.children))
    if isinstance(concept, Or):
        return Or(tuple(substitute_var(child, variable, replacement) for child in concept.children))
    if isinstance(concept, Exists):
        return Exists(concept.role, substitute_var(concept.child, variable, replacement))
    if isinstance(concept, Forall):
        return Forall(concept.role, substitute_var(concept.child, variable, replacement))
    return concept


def free_variables(concept: Concept) -> FrozenSet[str]:
    if isinstance(concept, Var):
        return frozenset({concept.variable})
    if isinstance(concept, Nu):
        return free_variables(concept.child) - {concept.variable}
    result: Set[str] = set()
    for child in children_of(concept):
        result |= free_variables(child)
    return frozenset(result)


def unroll(concept: Concept, depth: int) -> Concept:
    """Replace every ``nu X.B`` by ``B`` applied ``depth`` times to top."""

    def expand(node: Concept) -> Concept:
        if not isinstance(node, Nu):
            return node
        approximation: Concept = TOP
        for _ in range(depth):
            approximation = substitute_var(node.child, node.variable, approximation)
        return approximation

    return map_concept(concept, expand)


def concept_size(concept: Concept) -> int:
    return sum(1 for _ in subconcepts(concept))
