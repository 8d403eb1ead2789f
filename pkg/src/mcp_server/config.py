"""Configuration constants for MCP Server."""


class Config:
    """Server name and the syntax notes shared by the tool descriptions."""
    SERVER_NAME = "Interpolation Workbench Server"

    CONCEPT_SYNTAX = (
        "Concepts: top, bot, A, {a}, not C, C and D, C or D, some r.C, all r.C, nu X.C; "
        "parentheses group. Axioms: 'C [= D.' or 'C = D.', one per statement, each ending in a dot."
    )
    PROGRAM_SYNTAX = (
        "Rules: 'a | b :- c, not d, not not e.' one per statement; facts 'a.'; constraints ':- a, not b.'. "
        "Atoms start with a lower-case letter."
    )
