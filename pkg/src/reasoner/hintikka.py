"""Lazy tableau-style satisfiability for nominal-free, fixpoint-free ALC.

Each node label (a set of NNF concepts) is checked by a SAT call over its
Boolean structure, with quantified subconcepts as opaque atoms and the
ontology as unit clauses. A model's existential atoms then spawn successor
labels. An unsatisfiable successor yields a learned clause that forbids the
offending combination of restrictions everywhere. A successor label equal to
an ancestor label is satisfied by pointing back to the ancestor.
"""

import logging
from threading import Lock
from typing import Dict, FrozenSet, List, Set, Tuple

from pysat.formula import IDPool
from pysat.solvers import Solver

from src.config import Config
from src.syntax.concepts import (
    And, Bottom, Concept, ConceptName, Exists, Forall, Nominal, Not, Ontology, Or, Top, implies,
)
from src.syntax.operations import nnf
from src.syntax.render import render_concept

logger = logging.getLogger(__name__)

Label = FrozenSet[Concept]


class HintikkaReasoner:
    """Satisfiability of concept sets under a fixed ontology; keeps learned clauses across queries."""

    def __init__(self, ontology: Ontology):
        self.ontology = ontology
        self._pool = IDPool()
        self._solver = Solver(name=Config.SAT_SOLVER)
        self._memo: Dict[Concept, int] = {}
        self._restrictions: Dict[int, Concept] = {}
        self._true = self._pool.id("true")
        self._solver.add_clause([self._true])
        self._sat: Set[Label] = set()
        self._unsat: Set[Label] = set()
        self._lock = Lock()
        self.checks = 0
        for axiom in ontology:
            self._solver.add_clause([self._lit(nnf(implies(axiom.lhs, axiom.rhs)))])

    def _lit(self, concept: Concept) -> int:
        if concept in self._memo:
            return self._memo[concept]
        if isinstance(concept, Top):
            lit = self._true
        elif isinstance(concept, Bottom):
            lit = -self._true
        elif isinstance(concept, ConceptName):
            lit = self._pool.id(("name", concept.name))
        elif isinstance(concept, Nominal):
            raise ValueError("nominals are not supported by the lazy reasoner")
        elif isinstance(concept, Not):
            lit = -self._lit(concept.child)
        elif isinstance(concept, (Exists, Forall)):
            lit = self._pool.id(("restriction", concept))
            self._restrictions[lit] = concept
        else:
            lit = self._pool.id(("junction", concept))
            children = [self._lit(child) for child in concept.children]
            if isinstance(concept, And):
                for child in children:
                    self._solver.add_clause([-lit, child])
            elif isinstance(concept, Or):
                self._solver.add_clause([-lit] + children)
            else:
                raise TypeError(f"Unknown concept node {concept!r}")
        self._memo[concept] = lit
        return lit

    def satisfiable(self, concepts) -> bool:
        label = frozenset(nnf(concept) for concept in concepts)
        with self._lock:
            satisfied, _ = self._check(label, {}, [])
        return satisfied

    def _check(self, label: Label, on_stack: Dict[Label, int], stack: List[Label]) -> Tuple[bool, Set[int]]:
        if label in self._unsat:
            return False, set()
        if label in self._sat:
            return True, set()
        if label in on_stack:
            return True, {on_stack[label]}
        depth = len(stack)
        on_stack[label] = depth
        stack.append(label)
        try:
            assumptions = [self._lit(concept) for concept in sorted(label, key=render_concept)]
            while True:
                self.checks += 1
                if not self._solver.solve(assumptions=assumptions):
                    self._unsat.add(label)
                    return False, set()
                model = set(self._solver.get_model())
                chosen = [c for lit, c in self._restrictions.items() if lit in model]
                universals = [c for c in chosen if isinstance(c, Forall)]
                existentials = sorted((c for c in chosen if isinstance(c, Exists)), key=render_concept)
                dependencies: Set[int] = set()
                refuted = False
                for existential in existentials:
                    fillers = [u for u in universals if u.role == existential.role]
                    child = frozenset([existential.child] + [u.child for u in fillers])
                    satisfied, needs = self._check(child, on_stack, stack)
                    if not satisfied:
                        self._solver.add_clause([-self._lit(existential)] + [-self._lit(u) for u in fillers])
                        refuted = True
                        break
                    dependencies |= needs
                if refuted:
                    continue
                dependencies = {d for d in dependencies if d < depth}
                if not dependencies:
                    self._sat.add(label)
                return True, dependencies
        finally:
            stack.pop()
            del on_stack[label]

    def close(self) -> None:
        self._solver.delete()
