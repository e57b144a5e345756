"""
Report Schemas - pydantic models of every JSON document lctforge emits
Rationals travel as "p/q" strings; verdicts are pass/fail/not-applicable/undetermined
"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

Verdict = Literal["pass", "fail", "not-applicable", "undetermined"]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FacetModel(_Model):
    normal: List[int]
    rhs: int


class PolyhedronModel(_Model):
    vertices: List[List[int]]
    facets: List[FacetModel]
    covolume: str


class MultiplicityModel(_Model):
    method: Literal["polyhedral", "generic-section"]
    values: List[int]
    seeds: List[int]
    trials: int
    stable: bool


class LctModel(_Model):
    exact: Optional[str] = None
    lower: str
    upper: str


class DiagonalModel(_Model):
    verdict: Verdict
    witness: Optional[List[int]] = None
    reason: str


class AuditCheckModel(_Model):
    verdict: Verdict
    quantities: Dict[str, str]


class AuditModel(_Model):
    multiplicity_chain: AuditCheckModel
    dp_le_lct: AuditCheckModel
    am_gm: AuditCheckModel
    maximal_equality: AuditCheckModel


class MetadataModel(_Model):
    seed: int
    trials: int
    degree_cap: int
    coefficient_bound: int
    change: Optional[str] = None
    timings_ms: Optional[Dict[str, int]] = None


class AnalysisReport(_Model):
    kind: Literal["analysis"] = "analysis"
    n: int
    variables: List[str]
    generators: List[str]
    is_monomial: bool
    ord: int
    initial_ideal: List[List[int]]
    colength: int
    mixed_multiplicities: List[MultiplicityModel]
    e: int
    dp: str
    lct: LctModel
    arnold: Optional[str] = None
    diagonal: DiagonalModel
    audit: AuditModel
    polyhedron: PolyhedronModel
    term_ideal: List[List[int]]
    metadata: MetadataModel


class DiagonalReport(_Model):
    kind: Literal["diagonal"] = "diagonal"
    generators: List[str]
    dp: str
    lct_upper: str
    diagonal: DiagonalModel
    metadata: MetadataModel


class MilnorReport(_Model):
    kind: Literal["milnor"] = "milnor"
    polynomial: str
    jacobian: List[str]
    milnor_vector: MultiplicityModel
    milnor_number: int
    dp: str
    metadata: MetadataModel


class ComparisonReport(_Model):
    kind: Literal["comparison"] = "comparison"
    first: List[str]
    second: List[str]
    e_first: List[int]
    e_second: List[int]
    dp_first: str
    dp_second: str
    dp_monotone: Verdict
    equality_iff_same_closure: Verdict
    polyhedra_equal: bool


class ConvergenceRowModel(_Model):
    t: int
    initial_ideal: List[List[int]]
    t_dp: str
    t_lct: str
    scaled_e: List[str]
    dp_le_lct: Verdict
    lct_le_known: Verdict
    gap: str


class ConvergenceReport(_Model):
    kind: Literal["convergence"] = "convergence"
    generators: List[str]
    change: str
    dp: str
    known_lct: Optional[str] = None
    rows: List[ConvergenceRowModel]
    trend: Literal["nonincreasing", "mixed"]
    error: Optional[str] = None
    metadata: MetadataModel


class LatticeEstimateModel(_Model):
    scale: int
    estimate: str
    error: str


class OracleReport(_Model):
    kind: Literal["oracle"] = "oracle"
    generators: List[str]
    covolume: str
    shoelace: Optional[str] = None
    shoelace_match: Optional[Verdict] = None
    lattice: List[LatticeEstimateModel]
    lattice_trend: Verdict
    staircase_colength: int
    mora_colength: int
    colength_match: Verdict


class FindingModel(_Model):
    suite: str
    index: int
    check: str
    detail: str


class CorpusReport(_Model):
    kind: Literal["corpus"] = "corpus"
    seed: int
    counts: Dict[str, int]
    checks_run: int
    violations: List[FindingModel]
