"""pyparsing grammar for the concept DSL.

    ontology := (stmt ".")*
    stmt     := concept "[=" concept | concept "=" concept
    concept  := "top" | "bot" | NAME | "{" NAME "}" | "not" concept
              | concept "and" concept | concept "or" concept
              | "some" NAME "." concept | "all" NAME "." concept
              | "nu" VAR "." concept | VAR | "(" concept ")"

Prefix operators bind tighter than "and", which binds tighter than "or".
A name is a fixpoint variable inside the scope of a "nu" binding it and a
concept name everywhere else; "#" starts a comment.
"""

import re
from typing import FrozenSet, List, Optional, Set

from pyparsing import (
    Group, Keyword, Literal, OpAssoc, ParseBaseException, ParserElement, Regex, StringEnd, Suppress,
    ZeroOrMore, infix_notation, python_style_comment,
)

from src.exceptions import DslSyntaxError, FixpointVariableError
from src.syntax.concepts import (
    And, BOTTOM, Concept, ConceptInclusion, ConceptName, Exists, Forall, Nominal, Not, Nu, Ontology, Or,
    TOP, Var, children_of,
)

ParserElement.enable_packrat()

KEYWORDS = frozenset({"top", "bot", "not", "and", "or", "some", "all", "nu"})
_TOKEN_PATTERN = re.compile(r"\S+")


def _identifier() -> ParserElement:
    token = Regex(r"[A-Za-z][A-Za-z0-9_]*")
    token.add_condition(lambda tokens: tokens[0] not in KEYWORDS, message="keyword used as a name")
    return token


def _to_atom(tokens) -> Concept:
    return ConceptName(tokens[0])


def _to_prefix(tokens) -> Concept:
    group = tokens[0]
    head = group[0]
    if head == "not":
        return Not(group[1])
    if head == "some":
        return Exists(group[1], group[2])
    if head == "all":
        return Forall(group[1], group[2])
    if head == "nu":
        return Nu(group[1], group[2])
    raise ValueError(f"Unknown prefix operator {head!r}")


def _to_and(tokens) -> Concept:
    return And(tuple(tokens[0][0::2]))


def _to_or(tokens) -> Concept:
    return Or(tuple(tokens[0][0::2]))


def _build_grammar():
    atom = _identifier().set_parse_action(_to_atom)
    nominal = (Suppress("{") + _identifier() + Suppress("}")).set_parse_action(lambda t: Nominal(t[0]))
    operand = (
        Keyword("top").set_parse_action(lambda: TOP)
        | Keyword("bot").set_parse_action(lambda: BOTTOM)
        | nominal
        | atom
    )
    dot = Suppress(".")
    prefix = (
        Keyword("not")
        | (Keyword("some") | Keyword("all")) + _identifier() + dot
        | Keyword("nu") + _identifier() + dot
    )
    concept = infix_notation(
        operand,
        [
            (prefix, 1, OpAssoc.RIGHT, _to_prefix),
            (Keyword("and"), 2, OpAssoc.LEFT, _to_and),
            (Keyword("or"), 2, OpAssoc.LEFT, _to_or),
        ],
    )
    statement = Group(concept + (Literal("[=") | Literal("=")) - concept - dot)
    ontology = ZeroOrMore(statement) + StringEnd()
    ontology.ignore(python_style_comment)
    single = concept + StringEnd()
    single.ignore(python_style_comment)
    return ontology, single


_ONTOLOGY, _CONCEPT = _build_grammar()


def _syntax_error(text: str, exc: ParseBaseException) -> DslSyntaxError:
    match = _TOKEN_PATTERN.search(text, exc.loc) if exc.loc < len(text) else None
    token = match.group(0) if match else None
    detail = f"unexpected token {token!r}" if token else "unexpected end of input"
    return DslSyntaxError(detail, line=exc.lineno, column=exc.col, token=token)


def bind_variables(concept: Concept, bound: FrozenSet[str] = frozenset()) -> Concept:
    """Turn names bound by an enclosing nu into variables; innermost binder wins."""
    if isinstance(concept, ConceptName):
        return Var(concept.name) if concept.name in bound else concept
    if isinstance(concept, Nu):
        return Nu(concept.variable, bind_variables(concept.child, bound | {concept.variable}))
    if isinstance(concept, Not):
        return Not(bind_variables(concept.child, bound))
    if isinstance(concept, And):
        return And(tuple(bind_variables(child, bound) for child in concept.children))
    if isinstance(concept, Or):
        return Or(tuple(bind_variables(child, bound) for child in concept.children))
    if isinstance(concept, Exists):
        return Exists(concept.role, bind_variables(concept.child, bound))
    if isinstance(concept, Forall):
        return Forall(concept.role, bind_variables(concept.child, bound))
    return concept


def check_fixpoint_variables(concept: Concept) -> None:
    """Every variable must be bound by an enclosing nu and occur positively."""

    def visit(node: Concept, bound: Set[str], negations: int) -> None:
        if isinstance(node, Var):
            if node.variable not in bound:
                raise FixpointVariableError(f"unbound fixpoint variable {node.variable}")
            if negations % 2:
                raise FixpointVariableError(f"fixpoint variable {node.variable} occurs negatively")
            return
        if isinstance(node, Nu):
            visit(node.child, bound | {node.variable}, negations)
            return
        extra = 1 if isinstance(node, Not) else 0
        for child in children_of(node):
            visit(child, bound, negations + extra)

    visit(concept, set(), 0)


def parse_concept(text: str) -> Concept:
    """Parse a single concept such as ``some r.(A or B)``."""
    try:
        concept = _CONCEPT.parse_string(text, parse_all=True)[0]
    except ParseBaseException as exc:
        raise _syntax_error(text, exc) from exc
    concept = bind_variables(concept)
    check_fixpoint_variables(concept)
    return concept


def parse_ontology(text: str) -> Ontology:
    """Parse DSL text into an ontology; ``C = D`` yields ``C [= D`` and ``D [= C``."""
    try:
        statements = _ONTOLOGY.parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise _syntax_error(text, exc) from exc
    axioms: List[ConceptInclusion] = []
    for lhs, operator, rhs in statements:
        lhs, rhs = bind_variables(lhs), bind_variables(rhs)
        check_fixpoint_variables(lhs)
        check_fixpoint_variables(rhs)
        axioms.append(ConceptInclusion(lhs, rhs))
        if operator == "=":
            axioms.append(ConceptInclusion(rhs, lhs))
    return Ontology(tuple(axioms))


def parse_names(text: Optional[str]) -> List[str]:
    """Split a comma separated name list such as ``A,B,r``."""
    if not text:
        return []
    names = [part.strip() for part in text.split(",") if part.strip()]
    for name in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise DslSyntaxError(f"invalid name {name!r} in list")
    return names
