"""pyparsing grammar and canonical printer for the program text format.

    program := rule*
    rule    := [head] [":-" body] "."
    head    := ATOM ("|" ATOM)*
    body    := literal ("," literal)*
    literal := ATOM | "not" ATOM | "not" "not" ATOM

Atoms start with a lower-case letter; "%" and "#" start comments.
"""

from typing import Iterable, List

from pyparsing import (
    Group, Keyword, Literal, Optional, ParseBaseException, ParserElement, Regex, StringEnd, Suppress,
    ZeroOrMore, delimited_list,
)

from src.exceptions import DslSyntaxError
from src.lp.program import LPProgram, LPRule

ParserElement.enable_packrat()


def _atom() -> ParserElement:
    token = Regex(r"[a-z][A-Za-z0-9_]*")
    token.add_condition(lambda tokens: tokens[0] != "not", message="'not' used as an atom")
    return token


def _to_rule(tokens) -> LPRule:
    group = tokens[0]
    head, pbody, nbody, nnbody = set(), set(), set(), set()
    body_started = False
    for item in group:
        if item == ":-":
            body_started = True
        elif not body_started:
            head.add(item)
        elif isinstance(item, str):
            pbody.add(item)
        elif len(item) == 2:
            nbody.add(item[1])
        else:
            nnbody.add(item[2])
    return LPRule(frozenset(head), frozenset(pbody), frozenset(nbody), frozenset(nnbody))


def _build_grammar() -> ParserElement:
    atom = _atom()
    negation = Keyword("not")
    literal = Group(negation + negation + atom) | Group(negation + atom) | atom
    head = atom + ZeroOrMore(Suppress("|") + atom)
    body = Literal(":-") + Optional(delimited_list(literal, delim=","))
    rule = Group(Optional(head) + Optional(body) + Suppress(".")).set_parse_action(_to_rule)
    program = ZeroOrMore(rule) + StringEnd()
    program.ignore(Regex(r"[%#][^\n]*"))
    return program


_PROGRAM = _build_grammar()


def parse_program(text: str) -> LPProgram:
    """Parse rules such as ``a | b :- c, not d, not not e.``"""
    try:
        rules = _PROGRAM.parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise DslSyntaxError(f"malformed rule near {exc.line.strip()!r}", line=exc.lineno, column=exc.col) from exc
    return LPProgram(tuple(rules))


def render_rule(rule: LPRule) -> str:
    head = " | ".join(sorted(rule.head))
    body: List[str] = sorted(rule.pbody)
    body += [f"not {atom}" for atom in sorted(rule.nbody)]
    body += [f"not not {atom}" for atom in sorted(rule.nnbody)]
    if not body:
        return f"{head}."
    prefix = f"{head} " if head else ""
    return f"{prefix}:- {', '.join(body)}."


def render_program(program: LPProgram, header: Iterable[str] = ()) -> str:
    lines = [f"% {line}" for line in header]
    lines.extend(render_rule(rule) for rule in program)
    return "\n".join(lines) + ("\n" if lines else "")
