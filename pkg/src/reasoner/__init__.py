"""ALC/ALCO reasoning: types, elimination, entailment and bounded logical difference."""

from src.reasoner.closure import ClosureIndex, TypeRecord
from src.reasoner.difference import (
    conservative_extension_bounded, inseparable_bounded, is_uniform_interpolant_bounded, logical_diff_bounded,
)
from src.reasoner.entailment import (
    entails, entails_ontology, equivalent, equivalent_concepts, is_consistent, is_satisfiable, subsumes,
)
from src.reasoner.types import EliminationResult, TypeSpace, eliminate_types, realizable_types

__all__ = [
    "ClosureIndex",
    "EliminationResult",
    "TypeRecord",
    "TypeSpace",
    "conservative_extension_bounded",
    "eliminate_types",
    "entails",
    "entails_ontology",
    "equivalent",
    "equivalent_concepts",
    "inseparable_bounded",
    "is_consistent",
    "is_satisfiable",
    "is_uniform_interpolant_bounded",
    "logical_diff_bounded",
    "realizable_types",
    "subsumes",
]
