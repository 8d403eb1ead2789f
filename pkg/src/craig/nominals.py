"""Interpolant existence for ALCO via elimination of set mosaics.

A set mosaic ``(T1, T2)`` stands for one class of a Σ-bisimulation: the
types of its elements in the first and in the second model. Nominal types
are guessed per model and must occur in exactly one mosaic each. Mosaics
without nominal types are kept as a downward closed family, stored by its
maximal members.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from src.config import Config
from src.exceptions import PreconditionError, ResourceLimitError
from src.reasoner.closure import Literal, TypeRecord
from src.reasoner.types import TypeSpace, nominal_assignments, realizable_in, type_space
from src.semantics.bisimulation import Flavor
from src.semantics.joint import joint_witness_bounded
from src.syntax.concepts import Concept, ConceptName, Nominal, Not, Ontology, Signature, has_fixpoints

logger = logging.getLogger(__name__)

PRECHECK_DOMAIN = 3


class SetMosaic(NamedTuple):
    first: FrozenSet[TypeRecord]
    second: FrozenSet[TypeRecord]

    def side(self, index: int) -> FrozenSet[TypeRecord]:
        return self.first if index == 1 else self.second

    def within(self, other: "SetMosaic") -> bool:
        return self.first <= other.first and self.second <= other.second

    def __bool__(self) -> bool:
        return bool(self.first or self.second)


@dataclass(frozen=True)
class MosaicFamily:
    """Surviving mosaics of an accepted nominal guess."""

    free: FrozenSet[SetMosaic]
    special: Tuple[SetMosaic, ...]
    nominal_types: Tuple[Dict[str, TypeRecord], Dict[str, TypeRecord]]

    def good_for_nominals(self) -> bool:
        """Each guessed nominal type lies in exactly one special mosaic and in no free one."""
        for side, assignment in enumerate(self.nominal_types, start=1):
            for record in set(assignment.values()):
                if sum(record in mosaic.side(side) for mosaic in self.special) != 1:
                    return False
                if any(record in mosaic.side(side) for mosaic in self.free):
                    return False
        return True


class _SetElimination:
    """Elimination of set mosaics for one guess of nominal types."""

    def __init__(self, space: TypeSpace, sigma: Signature, free: Tuple[FrozenSet[TypeRecord], ...]):
        self.space = space
        self.roles = sorted(sigma.roles)
        closure = space.closure
        names = [ConceptName(name) for name in sorted(sigma.concepts)]
        names += [Nominal(name) for name in sorted(sigma.individuals)]
        self.profile_literals: List[Literal] = [closure.literal(c) for c in names if c in closure]
        self.free = free
        self.branches = 0
        self._requirements: Dict[Tuple[TypeRecord, str], Tuple[int, int]] = {}

    def tick(self) -> None:
        self.branches += 1
        if self.branches > Config.MAX_MOSAIC_BRANCHES:
            raise ResourceLimitError(f"set mosaic search exceeded {Config.MAX_MOSAIC_BRANCHES} branches")

    def profile(self, record: TypeRecord) -> Tuple[bool, ...]:
        return tuple(record.has(literal) for literal in self.profile_literals)

    def step(self, source: TypeRecord, role: str, target: TypeRecord) -> bool:
        key = (source, role)
        if key not in self._requirements:
            self._requirements[key] = self.space.requirement(source, role)
        return self.space.matches(target, self._requirements[key])

    def _demands(self, record: TypeRecord) -> List[Tuple[str, Literal]]:
        return sorted(((role, literal) for role, literal in self.space.demands(record) if role in self.roles),
                      key=lambda entry: (entry[0], entry[1]))

    def _serves(self, record: TypeRecord, side: int, role: str, literal: Literal, witness: SetMosaic) -> bool:
        return any(t.has(literal) and self.step(record, role, t) for t in witness.side(side))

    def _restrict(self, mosaic: SetMosaic, witness: SetMosaic, role: str) -> SetMosaic:
        """Members of ``mosaic`` with a ``role``-successor on their side of ``witness``."""
        kept = []
        for side in (1, 2):
            targets = witness.side(side)
            kept.append(frozenset(s for s in mosaic.side(side) if any(self.step(s, role, t) for t in targets)))
        return SetMosaic(*kept)

    def failure(self, mosaic: SetMosaic, family: Sequence[SetMosaic]) -> Optional[Tuple[int, TypeRecord, str, Literal]]:
        """First unmet demand of ``mosaic`` against ``family``, if any."""
        for side in (1, 2):
            for record in sorted(mosaic.side(side), key=lambda t: t.mask):
                for role, literal in self._demands(record):
                    if not any(self._serves(record, side, role, literal, witness)
                               and self._restrict(mosaic, witness, role) == mosaic for witness in family):
                        return side, record, role, literal
        return None

    def refine(self, mosaic: SetMosaic, family: Sequence[SetMosaic],
               core: SetMosaic = SetMosaic(frozenset(), frozenset())) -> List[SetMosaic]:
        """Maximal good sub-mosaics of ``mosaic`` that keep every type of ``core``."""
        results: List[SetMosaic] = []
        stack = [mosaic]
        while stack:
            current = stack.pop()
            if not core.within(current) or not current or any(current.within(found) for found in results):
                continue
            self.tick()
            failure = self.failure(current, family)
            if failure is None:
                results = [found for found in results if not found.within(current)] + [current]
                continue
            side, record, role, literal = failure
            if record not in core.side(side):
                dropped = [current.first, current.second]
                dropped[side - 1] = dropped[side - 1] - {record}
                stack.append(SetMosaic(*dropped))
            for witness in family:
                if self._serves(record, side, role, literal, witness):
                    restricted = self._restrict(current, witness, role)
                    if restricted != current and record in restricted.side(side):
                        stack.append(restricted)
        return results


def _antichain(mosaics: Sequence[SetMosaic]) -> FrozenSet[SetMosaic]:
    unique = set(mosaics)
    return frozenset(m for m in unique if not any(m != other and m.within(other) for other in unique))


def _partitions(items: List[Tuple[int, TypeRecord]], same_profile) -> Iterator[List[List[Tuple[int, TypeRecord]]]]:
    """Set partitions of ``items`` whose blocks agree on the Σ-profile."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partition in _partitions(rest, same_profile):
        for i, block in enumerate(partition):
            if same_profile(head, block[0]):
                yield partition[:i] + [[head] + block] + partition[i + 1:]
        yield [[head]] + partition


class _Search:
    def __init__(self, space: TypeSpace, sigma: Signature, c1: Concept, c2: Concept):
        self.space = space
        self.sigma = sigma
        self.left = space.closure.literal(c1)
        bit, polarity = space.closure.literal(c2)
        self.right = (bit, not polarity)

    def _free_types(self, types: List[TypeRecord], assignment: Dict[str, TypeRecord]) -> Optional[FrozenSet[TypeRecord]]:
        """Nominal-free types realizable next to the guessed nominal types, or None if the guess fails."""
        guessed = sorted(set(assignment.values()), key=lambda t: t.mask)
        candidates = [t for t in types if not t.nominal_names()] + guessed
        survivors = self.space.eliminate(candidates).survivors
        if not set(guessed) <= survivors:
            return None
        return frozenset(t for t in survivors if not t.nominal_names())

    def accepts(self, mosaic: SetMosaic) -> bool:
        return any(t.has(self.left) for t in mosaic.first) and any(t.has(self.right) for t in mosaic.second)

    def run(self) -> Optional[MosaicFamily]:
        types = self.space.enumerate()
        relaxed = sorted(realizable_in(self.space), key=lambda t: t.mask)
        guesses = nominal_assignments(self.space, relaxed)
        feasible = [(g, self._free_types(types, g)) for g in guesses]
        feasible = [(g, free) for g, free in feasible if free is not None]
        logger.debug("ALCO search over %d nominal guesses per side", len(feasible))
        for (first, free1), (second, free2) in product(feasible, feasible):
            family = self._guess(first, free1, second, free2)
            if family is not None:
                return family
        return None

    def _guess(self, first: Dict[str, TypeRecord], free1: FrozenSet[TypeRecord],
               second: Dict[str, TypeRecord], free2: FrozenSet[TypeRecord]) -> Optional[MosaicFamily]:
        elimination = _SetElimination(self.space, self.sigma, (free1, free2))
        profile = elimination.profile
        groups: Dict[Tuple[bool, ...], List[set]] = {}
        for side, free in ((1, free1), (2, free2)):
            for record in free:
                groups.setdefault(profile(record), [set(), set()])[side - 1].add(record)
        free_family = _antichain([SetMosaic(frozenset(a), frozenset(b)) for a, b in groups.values()])

        items = [(1, t) for t in sorted(set(first.values()), key=lambda t: t.mask)]
        items += [(2, t) for t in sorted(set(second.values()), key=lambda t: t.mask)]
        for partition in _partitions(items, lambda a, b: profile(a[1]) == profile(b[1])):
            elimination.tick()
            specials = []
            for block in partition:
                cores = (frozenset(t for s, t in block if s == 1), frozenset(t for s, t in block if s == 2))
                extension = groups.get(profile(block[0][1]), [set(), set()])
                specials.append((SetMosaic(*cores),
                                 SetMosaic(cores[0] | frozenset(extension[0]), cores[1] | frozenset(extension[1]))))
            family = self._eliminate(elimination, free_family, tuple(specials), (first, second))
            if family is not None:
                return family
        return None

    def _eliminate(self, elimination: _SetElimination, free: FrozenSet[SetMosaic],
                   specials: Tuple[Tuple[SetMosaic, SetMosaic], ...],
                   nominal_types: Tuple[Dict[str, TypeRecord], Dict[str, TypeRecord]]) -> Optional[MosaicFamily]:
        """Depth-first over the choices of refined special mosaics."""
        stack = [(free, specials)]
        while stack:
            free, specials = stack.pop()
            family = list(free) + [mosaic for _, mosaic in specials]
            refined_free = []
            for mosaic in sorted(free, key=_mosaic_key):
                refined_free.extend(elimination.refine(mosaic, family))
            new_free = _antichain(refined_free)
            options = []
            for core, mosaic in specials:
                choices = elimination.refine(mosaic, family, core)
                if not choices:
                    break
                options.append([(core, choice) for choice in sorted(choices, key=_mosaic_key)])
            else:
                for choice in product(*options):
                    elimination.tick()
                    if new_free == free and tuple(choice) == specials:
                        result = MosaicFamily(free, tuple(m for _, m in specials), nominal_types)
                        if any(self.accepts(m) for m in result.free) or any(self.accepts(m) for m in result.special):
                            if not result.good_for_nominals():
                                raise PreconditionError("accepted mosaic family is not good for nominals")
                            return result
                        continue
                    stack.append((new_free, tuple(choice)))
        return None


def _mosaic_key(mosaic: SetMosaic) -> Tuple:
    return (sorted(t.mask for t in mosaic.first), sorted(t.mask for t in mosaic.second))


def alco_joint_consistency(ontology: Ontology, c1: Concept, c2: Concept,
                           sigma: Signature) -> Optional[MosaicFamily]:
    """Surviving family relating an instance of ``c1`` to an instance of ``not c2``, or None."""
    if ontology.has_fixpoints() or has_fixpoints(c1) or has_fixpoints(c2):
        raise PreconditionError("set mosaic elimination needs fixpoint-free input")
    space = type_space(ontology, [c1, c2])
    return _Search(space, sigma, c1, c2).run()


def interpolant_exists_alco(ontology: Ontology, c1: Concept, c2: Concept, sigma: Signature) -> bool:
    """Whether some ALCO concept over ``sigma`` interpolates ``c1 [= c2`` under ``ontology``."""
    witness = joint_witness_bounded(ontology, c1, Not(c2), sigma, PRECHECK_DOMAIN, Flavor.ALCO)
    if witness is not None:
        logger.debug("Small joint witness found; no interpolant")
        return False
    return alco_joint_consistency(ontology, c1, c2, sigma) is None
