"""Forgetting atoms from programs by HT-projection, and the properties a forgetting result may satisfy."""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set

from src.exceptions import PreconditionError, SynthesisError
from src.lp.parser import render_program
from src.lp.program import Atoms, HTPair, LPProgram, LPRule, facts, subsets
from src.lp.semantics import Relation, answer_sets, entails_lp, exclude, ht_models, universe_of
from src.records import ForgettingReport

logger = logging.getLogger(__name__)


def ht_projection(program: LPProgram, forgotten: Iterable[str]) -> Set[HTPair]:
    """``{<X \\ V, Y \\ V> | <X, Y> in HT(P)}``."""
    forgotten = frozenset(forgotten)
    return {HTPair(pair.here - forgotten, pair.there - forgotten) for pair in ht_models(program)}


def _countermodel_rule(pair: HTPair, universe: Atoms, target: Set[HTPair]) -> LPRule:
    """A rule violated exactly by ``pair`` or, for total pairs, by every pair with that there-world."""
    here, there = pair
    if here == there or HTPair(there, there) not in target:
        return LPRule(nbody=universe - there, nnbody=there)
    return LPRule(head=there - here, pbody=here, nbody=universe - there, nnbody=there - here)


def _weakenings(rule: LPRule) -> Iterator[LPRule]:
    for atom in sorted(rule.nnbody):
        yield LPRule(rule.head, rule.pbody, rule.nbody, rule.nnbody - {atom})
    for atom in sorted(rule.nbody):
        yield LPRule(rule.head, rule.pbody, rule.nbody - {atom}, rule.nnbody)
    for atom in sorted(rule.pbody):
        yield LPRule(rule.head, rule.pbody - {atom}, rule.nbody, rule.nnbody)
    for atom in sorted(rule.head):
        yield LPRule(rule.head - {atom}, rule.pbody, rule.nbody, rule.nnbody)


def _generalise(rule: LPRule, target: Set[HTPair]) -> LPRule:
    """Drop literals while every target pair still satisfies the rule."""
    changed = True
    while changed:
        changed = False
        for candidate in _weakenings(rule):
            if all(candidate.holds_ht(here, there) for here, there in target):
                rule, changed = candidate, True
                break
    return rule


def _violations(rule: LPRule, pairs: Iterable[HTPair]) -> FrozenSet[HTPair]:
    return frozenset(pair for pair in pairs if not rule.holds_ht(*pair))


def _synthesise(kept: List[LPRule], target: Set[HTPair], universe: Atoms) -> List[LPRule]:
    everything = {HTPair(here, there) for there in subsets(universe) for here in subsets(there)}
    uncovered = {pair for pair in everything - target if all(rule.holds_ht(*pair) for rule in kept)}
    candidates: Dict[LPRule, FrozenSet[HTPair]] = {}
    for pair in sorted(uncovered, key=lambda p: (len(p.there), sorted(p.there), len(p.here), sorted(p.here))):
        rule = _generalise(_countermodel_rule(pair, universe, target), target)
        if rule not in candidates:
            candidates[rule] = _violations(rule, uncovered)
    chosen: List[LPRule] = []
    while uncovered:
        best = max(candidates, key=lambda rule: len(candidates[rule] & uncovered))
        chosen.append(best)
        uncovered -= candidates.pop(best)
    return chosen


def forget_ht(program: LPProgram, forgotten: Iterable[str]) -> LPProgram:
    """A program over ``atoms(P) \\ V`` whose HT-models are the projection of ``HT(P)``.

    Rules of ``P`` that avoid ``V`` are kept; the remaining non-members of the
    projection are excluded by countermodel rules, each generalised as far as
    the projection allows and selected greedily. The result is checked against
    the projection before it is returned.
    """
    forgotten = frozenset(forgotten)
    if not forgotten <= program.atoms:
        raise PreconditionError(f"cannot forget atoms outside the program: {', '.join(sorted(forgotten - program.atoms))}")
    universe = universe_of(None, program) - forgotten
    target = ht_projection(program, forgotten)
    kept = [rule for rule in program if not rule.atoms & forgotten]
    rules = kept + _synthesise(kept, target, universe)
    result = LPProgram(tuple(rules), universe)
    synthesised = ht_models(result, universe)
    if synthesised != target:
        raise SynthesisError(f"forgetting {sorted(forgotten)} produced {len(synthesised ^ target)} wrong HT-models")
    logger.debug("Forgot %s: kept %d rules, synthesised %d", sorted(forgotten), len(kept), len(rules) - len(kept))
    return result


def _literals(atoms: Iterable[str]) -> List[LPRule]:
    literals = []
    for atom in sorted(atoms):
        literals.append(LPRule(pbody=frozenset({atom})))
        literals.append(LPRule(nbody=frozenset({atom})))
        literals.append(LPRule(nnbody=frozenset({atom})))
    return literals


def bounded_rule_family(atoms: Iterable[str], max_body: int = 2) -> Iterator[LPRule]:
    """Rules with at most one head atom and at most ``max_body`` body literals."""
    atoms = sorted(atoms)
    literals = _literals(atoms)
    heads = [frozenset()] + [frozenset({atom}) for atom in atoms]
    for size in range(max_body + 1):
        for body in combinations(literals, size):
            pbody = frozenset().union(*(lit.pbody for lit in body))
            nbody = frozenset().union(*(lit.nbody for lit in body))
            nnbody = frozenset().union(*(lit.nnbody for lit in body))
            for head in heads:
                yield LPRule(head, pbody, nbody, nnbody)


def _entailed_rules(pairs: Set[HTPair], family: List[LPRule]) -> Set[LPRule]:
    return {rule for rule in family if all(rule.holds_ht(*pair) for pair in pairs)}


def check_forgetting_properties(program: LPProgram, forgotten: Iterable[str],
                                candidate: LPProgram) -> Dict[str, bool]:
    """CP, W, bounded PP and SP restricted to sets of facts for ``candidate`` as ``f(P, V)``.

    PP quantifies over programs built from rules with at most one head atom and
    two body literals; HT-entailment of a program is entailment of each rule, so
    single rules suffice.
    """
    forgotten = frozenset(forgotten)
    remaining = program.atoms - forgotten
    if not candidate.atoms <= remaining:
        raise PreconditionError("the candidate must only use atoms that are not forgotten")
    universe = universe_of(None, program)
    projection = ht_projection(program, forgotten)
    candidate_models = ht_models(candidate, remaining)

    consequence = answer_sets(candidate) == exclude(answer_sets(program), forgotten)
    weakening = entails_lp(program, candidate, Relation.HT, universe)
    family = list(bounded_rule_family(remaining))
    positive = _entailed_rules(projection, family) <= _entailed_rules(candidate_models, family)
    strong = all(
        answer_sets(candidate.union(facts(added))) == exclude(answer_sets(program.union(facts(added))), forgotten)
        for added in subsets(remaining)
    )
    return {"CP": consequence, "W": weakening, "PP": positive, "SP": strong}


def is_uniform_interpolant(program: LPProgram, keep: Iterable[str], candidate: LPProgram,
                           relation: Relation = Relation.HT) -> bool:
    """Whether ``candidate`` is a uniform interpolant of ``program`` for the atoms ``keep``.

    For HT-entailment the candidate's HT-models over ``keep`` must be the
    projection of the program's, for cautious entailment its answer sets must be
    those of the program with the other atoms excluded.
    """
    keep = frozenset(keep) & program.atoms
    if not candidate.atoms <= keep:
        return False
    forgotten = program.atoms - keep
    if Relation(relation) is Relation.HT:
        return ht_models(candidate, keep) == ht_projection(program, forgotten)
    return answer_sets(candidate) == exclude(answer_sets(program), forgotten)


def is_lp_craig_interpolant(first: LPProgram, second: LPProgram, candidate: LPProgram,
                            left: Relation = Relation.CAUTIOUS, right: Relation = Relation.CAUTIOUS) -> bool:
    """``first |-left candidate``, ``candidate |-right second`` and only shared atoms in ``candidate``."""
    if not candidate.atoms <= first.atoms & second.atoms:
        return False
    return entails_lp(first, candidate, left) and entails_lp(candidate, second, right)


def forgetting_report(program: LPProgram, forgotten: Iterable[str],
                      candidate: Optional[LPProgram] = None) -> ForgettingReport:
    """Forget with :func:`forget_ht` unless a candidate is given, then check the properties."""
    forgotten = frozenset(forgotten)
    method = "candidate" if candidate is not None else "ht-projection"
    result = candidate if candidate is not None else forget_ht(program, forgotten)
    return ForgettingReport(
        program=render_program(result),
        forgotten=sorted(forgotten),
        method=method,
        properties=check_forgetting_properties(program, forgotten, result),
    )
