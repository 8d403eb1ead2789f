"""Craig and Σ-interpolants by mosaic elimination, explicit definitions and ALCO existence."""

from src.craig.extraction import interpolant_from_trace, prune_interpolant, verify_interpolant
from src.craig.interpolants import (
    craig_or_sigma_interpolant, explicit_definition, ontology_free_reduction, phi_depth,
)
from src.craig.mosaics import Cause, CauseKind, EliminationTrace, Mosaic, joint_consistency_alc
from src.craig.nominals import MosaicFamily, SetMosaic, alco_joint_consistency, interpolant_exists_alco

__all__ = [
    "Cause",
    "CauseKind",
    "EliminationTrace",
    "Mosaic",
    "MosaicFamily",
    "SetMosaic",
    "alco_joint_consistency",
    "craig_or_sigma_interpolant",
    "explicit_definition",
    "interpolant_exists_alco",
    "interpolant_from_trace",
    "joint_consistency_alc",
    "ontology_free_reduction",
    "phi_depth",
    "prune_interpolant",
    "verify_interpolant",
]
