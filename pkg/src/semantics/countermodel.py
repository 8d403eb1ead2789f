"""Bounded countermodel search, the independent oracle for ``O |= C [= D``.

Absence of a countermodel up to the bound is not a proof of entailment.
"""

import logging
from typing import List, Optional, Tuple

from pysat.formula import IDPool
from pysat.solvers import Solver

from src.config import Config
from src.exceptions import PreconditionError, VerificationError
from src.semantics.encoding import ModelEncoder
from src.semantics.evaluation import extension_eval, is_model
from src.semantics.interpretation import Interpretation
from src.syntax.concepts import And, Concept, Not, Ontology, has_fixpoints, implies
from src.syntax.operations import signature

logger = logging.getLogger(__name__)


def check_domain_bound(max_domain: int) -> None:
    if max_domain < 1:
        raise PreconditionError("the domain bound must be positive")
    if max_domain > Config.MAX_COUNTERMODEL_DOMAIN:
        raise PreconditionError(
            f"domain bound {max_domain} exceeds the configured cap {Config.MAX_COUNTERMODEL_DOMAIN}"
        )


def check_fixpoint_free(ontology: Ontology, *concepts: Concept) -> None:
    if ontology.has_fixpoints() or any(has_fixpoints(concept) for concept in concepts):
        raise PreconditionError("model search needs fixpoint-free input")


def least_model(solver: Solver, order: List[int]) -> Optional[List[int]]:
    """Lexicographically least model over ``order`` with false before true."""
    if not solver.solve():
        return None
    fixed: List[int] = []
    for var in order:
        if solver.solve(assumptions=fixed + [-var]):
            fixed.append(-var)
        else:
            fixed.append(var)
    solver.solve(assumptions=fixed)
    return solver.get_model()


def bounded_countermodel(ontology: Ontology, lhs: Concept, rhs: Concept,
                         max_domain: int) -> Optional[Tuple[Interpretation, int]]:
    """Smallest model of ``ontology`` whose element 0 is in ``lhs and not rhs``.

    Domains of size 1..max_domain are tried in order; within a size the
    lexicographically least assignment (concept names, then roles, then
    individuals) is returned.
    """
    check_domain_bound(max_domain)
    check_fixpoint_free(ontology, lhs, rhs)
    sig = signature([ontology, lhs, rhs])
    query = And((lhs, Not(rhs)))
    for size in range(1, max_domain + 1):
        pool = IDPool()
        encoder = ModelEncoder(pool, "m", size, sig)
        encoder.register_all()
        for axiom in ontology:
            encoder.require_everywhere(implies(axiom.lhs, axiom.rhs))
        encoder.require(query, 0)
        with Solver(name=Config.SAT_SOLVER, bootstrap_with=encoder.clauses) as solver:
            model = least_model(solver, encoder.ordered_variables())
        if model is None:
            continue
        interpretation = encoder.decode(model)
        if not is_model(interpretation, ontology) or 0 not in extension_eval(interpretation, query):
            raise VerificationError("decoded countermodel does not satisfy its own constraints")
        logger.debug("Countermodel found with domain size %d", size)
        return interpretation, 0
    return None
