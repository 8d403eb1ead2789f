"""Result records returned by the command line structured mode and the tool server."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class InterpolantStatus(str, Enum):
    FOUND = "found"
    NONE_EXISTS = "none_exists"
    NOT_ENTAILED = "not_entailed"
    NOT_DEFINABLE = "not_definable"


class Verification(BaseModel):
    signature_ok: bool = Field(..., description="The interpolant only uses names of the signature.")
    left_entailment: bool = Field(..., description="The ontology entails lhs [= interpolant.")
    right_entailment: bool = Field(..., description="The ontology entails interpolant [= rhs.")

    @property
    def passed(self) -> bool:
        return self.signature_ok and self.left_entailment and self.right_entailment


class InterpolantReport(BaseModel):
    """Outcome of a Craig, Σ-interpolant or explicit definition request."""

    status: InterpolantStatus = Field(..., description="Whether an interpolant was found and, if not, why.")
    interpolant: Optional[str] = Field(None, description="The interpolant in DSL syntax when found.")
    signature: List[str] = Field(default_factory=list, description="Names the interpolant may use.")
    verification: Optional[Verification] = Field(None, description="Post-condition checks of the interpolant.")
    rounds: int = Field(0, description="Number of mosaic elimination rounds.")
    mosaics: int = Field(0, description="Number of initial mosaics.")
    survivors: int = Field(0, description="Number of mosaics left after elimination.")


class UniformInterpolantRecord(BaseModel):
    ontology: str = Field(..., description="Uniform interpolant in DSL syntax, header lines included.")
    signature: List[str] = Field(..., description="Names kept.")
    policy: str = Field(..., description="Cycle policy: fixpoint, aux or approx:k.")
    used_fixpoints: bool = Field(..., description="Whether greatest fixpoints occur in the result.")
    auxiliary_names: List[str] = Field(default_factory=list, description="Auxiliary names introduced by aux.")


class SubsumptionRecord(BaseModel):
    lhs: str = Field(..., description="Subsumee in DSL syntax.")
    rhs: str = Field(..., description="Subsumer in DSL syntax.")
    entailed: bool = Field(..., description="Whether the ontology entails lhs [= rhs.")


class CountermodelRecord(BaseModel):
    found: bool = Field(..., description="Whether a countermodel was found within the domain bound.")
    max_domain: int = Field(..., description="Largest domain size searched.")
    interpretation: Optional[str] = Field(None, description="Countermodel in interpretation text format.")


class ForgettingReport(BaseModel):
    """A program produced by forgetting atoms, with the properties it satisfies."""

    program: str = Field(..., description="Resulting program in rule syntax.")
    forgotten: List[str] = Field(..., description="Atoms that were forgotten.")
    method: str = Field(..., description="Forgetting operator used.")
    properties: Dict[str, bool] = Field(default_factory=dict, description="Checked forgetting properties.")


class CheckRecord(BaseModel):
    path: str = Field(..., description="Checked input file.")
    kind: str = Field(..., description="ontology, program or interpretation.")
    items: int = Field(..., description="Number of axioms, rules or domain elements.")
    signature: List[str] = Field(default_factory=list, description="Names or atoms occurring in the input.")


class EquivalenceRecord(BaseModel):
    first: str = Field(..., description="First ontology file.")
    second: str = Field(..., description="Second ontology file.")
    equivalent: bool = Field(..., description="Whether both ontologies entail each other.")


class DifferenceRecord(BaseModel):
    """Signature inclusions entailed by the first ontology but not the second."""

    signature: List[str] = Field(..., description="Signature of the candidate inclusions.")
    depth: int = Field(..., description="Role depth bound of the candidates.")
    budget: int = Field(..., description="Number of candidates checked at most.")
    witnesses: List[str] = Field(default_factory=list, description="Inclusions separating the ontologies.")


class ExistenceRecord(BaseModel):
    signature: List[str] = Field(..., description="Signature the interpolant must use.")
    exists: bool = Field(..., description="Whether an interpolant in the signature exists.")


class ModelCheckRecord(BaseModel):
    holds: bool = Field(..., description="Whether the interpretation is a model of the ontology.")
    violated: List[str] = Field(default_factory=list, description="Axioms the interpretation violates.")


class AnswerSetsRecord(BaseModel):
    answer_sets: List[List[str]] = Field(..., description="Answer sets, each sorted.")

    @property
    def coherent(self) -> bool:
        return bool(self.answer_sets)


class HTModelsRecord(BaseModel):
    universe: List[str] = Field(..., description="Atoms the pairs range over.")
    pairs: List[Tuple[List[str], List[str]]] = Field(..., description="HT-models as (here, there) pairs.")


class UniformCheckRecord(BaseModel):
    """Verdicts on a candidate program for the atoms that are kept."""

    keep: List[str] = Field(..., description="Atoms the candidate may use.")
    uniform: Dict[str, bool] = Field(..., description="Uniform interpolant verdict per entailment relation.")
    properties: Dict[str, bool] = Field(default_factory=dict, description="Forgetting properties of the candidate.")


class SelfCheckRecord(BaseModel):
    name: str = Field(..., description="Registry example name.")
    kind: str = Field(..., description="ontology, pair or definition.")
    passed: bool = Field(..., description="Whether the expected artifact holds under the reasoner.")


class SelfCheckReport(BaseModel):
    results: List[SelfCheckRecord] = Field(..., description="One verdict per built-in example, in name order.")

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


class ExampleRecord(BaseModel):
    name: str = Field(..., description="Registry example name.")
    kind: str = Field(..., description="ontology, pair or definition.")
    note: str = Field(..., description="What the example shows.")
    source: str = Field("", description="Ontology in DSL syntax.")
    signature: List[str] = Field(default_factory=list, description="Signature of the expected artifact.")
    expected: Optional[str] = Field(None, description="Expected interpolant or definition.")
    lhs: Optional[str] = Field(None, description="Subsumee or context concept.")
    rhs: Optional[str] = Field(None, description="Subsumer or target concept.")


class RegistryRecord(BaseModel):
    examples: List[ExampleRecord] = Field(..., description="Built-in examples in name order.")


class GeneratedRecord(BaseModel):
    kind: str = Field(..., description="ontology or program.")
    seed: int = Field(..., description="Seed of the generator.")
    text: str = Field(..., description="Generated input in its text format.")
