from src.semantics.bisimulation import Flavor, bisimilar, greatest_bisimulation, is_bisimulation
from src.semantics.countermodel import bounded_countermodel
from src.semantics.evaluation import extension_eval, is_model, satisfies
from src.semantics.interpretation import Interpretation, parse_interpretation, render_interpretation
from src.semantics.joint import JointWitness, joint_witness_bounded

__all__ = [
    "Flavor",
    "Interpretation",
    "JointWitness",
    "bisimilar",
    "bounded_countermodel",
    "extension_eval",
    "greatest_bisimulation",
    "is_bisimulation",
    "is_model",
    "joint_witness_bounded",
    "parse_interpretation",
    "render_interpretation",
    "satisfies",
]
