"""Bounded search for two models with Σ-bisimilar witnesses.

This is the finite oracle for joint consistency: element 0 of the first
model satisfies ``left``, element 0 of the second satisfies ``right``, and
the two are related by a Σ-bisimulation encoded directly in the SAT problem.
"""

import logging
from itertools import product
from typing import NamedTuple, Optional

from pysat.formula import IDPool
from pysat.solvers import Solver

from src.config import Config
from src.exceptions import PreconditionError, VerificationError
from src.semantics.bisimulation import Flavor, Relation, is_bisimulation
from src.semantics.countermodel import check_domain_bound, check_fixpoint_free
from src.semantics.encoding import ModelEncoder
from src.semantics.evaluation import extension_eval, is_model
from src.semantics.interpretation import Interpretation
from src.syntax.concepts import Concept, Ontology, Signature, implies
from src.syntax.operations import signature

logger = logging.getLogger(__name__)


class JointWitness(NamedTuple):
    first: Interpretation
    second: Interpretation
    relation: Relation


def _encode_pair(ontology: Ontology, left: Concept, right: Concept, sigma: Signature, flavor: Flavor,
                 size1: int, size2: int):
    sig = signature([ontology, left, right])
    pool = IDPool()
    first = ModelEncoder(pool, "1", size1, sig)
    second = ModelEncoder(pool, "2", size2, sig)
    clauses = []
    for encoder in (first, second):
        encoder.register_all()
        for axiom in ontology:
            encoder.require_everywhere(implies(axiom.lhs, axiom.rhs))
    first.require(left, 0)
    second.require(right, 0)

    def related(d: int, e: int) -> int:
        return pool.id(("z", d, e))

    link_count = 0
    for d, e in product(range(size1), range(size2)):
        z = related(d, e)
        for name in sorted(sigma.concepts):
            clauses.append([-z, -first.concept(name, d), second.concept(name, e)])
            clauses.append([-z, first.concept(name, d), -second.concept(name, e)])
        if flavor is Flavor.ALCO:
            for name in sorted(sigma.individuals & sig.individuals):
                clauses.append([-z, -first.individual(name, d), second.individual(name, e)])
                clauses.append([-z, first.individual(name, d), -second.individual(name, e)])
        for role in sorted(sigma.roles):
            # forth
            for d2 in range(size1):
                links = []
                for e2 in range(size2):
                    link_count += 1
                    link = pool.id(("w", link_count))
                    clauses.append([-link, second.role(role, e, e2)])
                    clauses.append([-link, related(d2, e2)])
                    links.append(link)
                clauses.append([-z, -first.role(role, d, d2)] + links)
            # back
            for e2 in range(size2):
                links = []
                for d2 in range(size1):
                    link_count += 1
                    link = pool.id(("w", link_count))
                    clauses.append([-link, first.role(role, d, d2)])
                    clauses.append([-link, related(d2, e2)])
                    links.append(link)
                clauses.append([-z, -second.role(role, e, e2)] + links)
    clauses.append([related(0, 0)])
    return first, second, related, first.clauses + second.clauses + clauses


def joint_witness_bounded(ontology: Ontology, left: Concept, right: Concept, sigma: Signature,
                          max_domain: int, flavor: Flavor = Flavor.ALC) -> Optional[JointWitness]:
    """Two models of ``ontology`` with Σ-bisimilar elements in ``left`` and ``right``.

    Domain sizes are tried by increasing total size. Returns None when no pair
    exists within ``max_domain`` elements per model.
    """
    check_domain_bound(max_domain)
    check_fixpoint_free(ontology, left, right)
    flavor = Flavor(flavor)
    if flavor is Flavor.ALC and (ontology.has_nominals() or signature([left, right]).individuals):
        raise PreconditionError("nominals need the ALCO flavor")
    sizes = sorted(product(range(1, max_domain + 1), repeat=2), key=lambda pair: (sum(pair), pair))
    for size1, size2 in sizes:
        first, second, related, clauses = _encode_pair(ontology, left, right, sigma, flavor, size1, size2)
        with Solver(name=Config.SAT_SOLVER, bootstrap_with=clauses) as solver:
            if not solver.solve():
                continue
            model = set(solver.get_model())
        i1, i2 = first.decode(sorted(model)), second.decode(sorted(model))
        relation = frozenset((d, e) for d in range(size1) for e in range(size2) if related(d, e) in model)
        if not (is_model(i1, ontology) and is_model(i2, ontology)
                and 0 in extension_eval(i1, left) and 0 in extension_eval(i2, right)
                and is_bisimulation(i1, i2, sigma, relation, flavor)):
            raise VerificationError("decoded joint witness does not satisfy its own constraints")
        logger.debug("Joint witness found with domain sizes %d and %d", size1, size2)
        return JointWitness(i1, i2, relation)
    return None
