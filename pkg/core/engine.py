"""
Analysis Engine - runs each pipeline and assembles its report
Owns configuration, seed and stage timings; subsystems stay pure
"""
import logging
import time
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

from core.errors import IdealSyntaxError, InfiniteColengthError, InternalConsistencyError, UnitIdealError
from core.ideal import IdealPresentation
from core.ideal_ops import LinearChange, jacobian_ideal
from core.monomial_ideal import MonomialIdeal
from core.polynomial import render_rational
from core.standard_basis import initial_ideal
from invariants.convergence import convergence_experiment
from invariants.lct import (
    AuditRecord,
    DiagonalVerdict,
    LctResult,
    audit_inequalities,
    decide_diagonal,
    dp_sum,
    is_diagonal,
    rees_compare,
    resolve_lct,
)
from invariants.multiplicity import (
    MixedMultiplicityVector,
    milnor_vector,
    mixed_multiplicities_generic,
    mixed_multiplicities_polyhedral,
    ord_,
)
from invariants.newton import NewtonPolyhedron, covolume, polyhedron_of_ideal, term_ideal
from services.config import OracleConfig
from services.corpus import run_corpus
from services.oracles import run_oracles
from services.schemas import (
    AnalysisReport,
    AuditCheckModel,
    AuditModel,
    ComparisonReport,
    ConvergenceReport,
    ConvergenceRowModel,
    CorpusReport,
    DiagonalModel,
    DiagonalReport,
    FacetModel,
    FindingModel,
    LatticeEstimateModel,
    LctModel,
    MetadataModel,
    MilnorReport,
    MultiplicityModel,
    OracleReport,
    PolyhedronModel,
)

logger = logging.getLogger(__name__)


class Stage(Enum):
    """Pipeline stages that carry a timing."""
    BASIS = "basis"
    MULTIPLICITY = "multiplicity"
    POLYHEDRON = "polyhedron"
    LCT = "lct"
    AUDIT = "audit"
    EXPERIMENT = "experiment"
    ORACLE = "oracle"
    CORPUS = "corpus"


# ----- model conversion ---------------------------------------------------

def multiplicity_model(e: MixedMultiplicityVector) -> MultiplicityModel:
    return MultiplicityModel(
        method=e.method, values=list(e.values), seeds=list(e.seeds), trials=e.trials, stable=e.stable
    )


def polyhedron_model(polyhedron: NewtonPolyhedron) -> PolyhedronModel:
    return PolyhedronModel(
        vertices=[list(v) for v in polyhedron.vertices],
        facets=[FacetModel(normal=list(f.normal), rhs=f.rhs) for f in polyhedron.facets],
        covolume=render_rational(covolume(polyhedron)),
    )


def lct_model(lct: LctResult) -> LctModel:
    return LctModel(
        exact=None if lct.exact is None else render_rational(lct.exact),
        lower=render_rational(lct.lower_bound),
        upper=render_rational(lct.upper_bound),
    )


def diagonal_model(verdict: DiagonalVerdict) -> DiagonalModel:
    return DiagonalModel(
        verdict=verdict.verdict,
        witness=None if verdict.witness is None else list(verdict.witness),
        reason=verdict.reason,
    )


def audit_model(audit: AuditRecord) -> AuditModel:
    return AuditModel(
        **{
            name: AuditCheckModel(verdict=check.verdict, quantities=dict(check.quantities))
            for name, check in audit.checks().items()
        }
    )


class AnalysisEngine:
    """Coordinates parsing results, invariants and report assembly."""

    def __init__(self, config: Optional[OracleConfig] = None, seed: int = 0, timings: bool = False):
        self.config = config or OracleConfig()
        self.seed = seed
        self.record_timings = timings
        self.timings: Dict[str, int] = {}

    # ----- bookkeeping --------------------------------------------------

    @contextmanager
    def _stage(self, stage: Stage):
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = int((time.perf_counter() - start) * 1000)
            self.timings[stage.value] = self.timings.get(stage.value, 0) + elapsed
            logger.debug("stage %s: %d ms", stage.value, elapsed)

    def _metadata(self, change: Optional[LinearChange] = None) -> MetadataModel:
        return MetadataModel(
            seed=self.seed,
            trials=self.config.trials,
            degree_cap=self.config.degree_cap,
            coefficient_bound=self.config.coefficient_bound,
            change=None if change is None else change.render(),
            timings_ms=dict(sorted(self.timings.items())) if self.record_timings else None,
        )

    def _require_finite(self, ideal: IdealPresentation) -> MonomialIdeal:
        with self._stage(Stage.BASIS):
            initial = initial_ideal(ideal, self.config.degree_cap)
        if not initial.is_finite_colength:
            raise InfiniteColengthError(
                "ideal has infinite colength: its initial ideal misses a pure power"
            )
        if initial.colength() == 0:
            raise UnitIdealError("ideal contains a unit (colength 0)")
        return initial

    def _multiplicities(self, ideal: IdealPresentation):
        """e-vector used downstream, plus every vector computed for the report."""
        config = self.config
        with self._stage(Stage.MULTIPLICITY):
            generic = mixed_multiplicities_generic(
                ideal, self.seed, config.trials, config.coefficient_bound, config.degree_cap
            )
            if not ideal.is_monomial:
                return generic, [generic]
            exact = mixed_multiplicities_polyhedral(MonomialIdeal(ideal.monomial_exponents(), ideal.n))
        if any(g < p for g, p in zip(generic.values, exact.values)):
            raise InternalConsistencyError(
                f"generic sections undershoot polyhedral multiplicities: {generic.values} < {exact.values}"
            )
        if generic.values != exact.values:
            logger.warning("⚠️ Generic sections overshoot: %s vs %s", generic.values, exact.values)
        return exact, [exact, generic]

    def _verdict(self, ideal, polyhedron, e, nondegenerate) -> DiagonalVerdict:
        verdict = decide_diagonal(polyhedron, e, ideal.is_monomial, nondegenerate)
        if ideal.is_monomial:
            numeric, witness = is_diagonal(MonomialIdeal(ideal.monomial_exponents(), ideal.n), e)
            if numeric != verdict.is_diagonal or witness != verdict.witness:
                raise InternalConsistencyError("diagonality verdicts disagree on a monomial ideal")
        return verdict

    # ----- commands -----------------------------------------------------

    def analyze(
        self,
        ideal: IdealPresentation,
        change: Optional[LinearChange] = None,
        nondegenerate: bool = False,
    ) -> AnalysisReport:
        """Full pipeline: initial ideal, multiplicities, lct sandwich, diagonality, audit."""
        config = self.config
        initial = self._require_finite(ideal)
        order = ord_(ideal)
        e, vectors = self._multiplicities(ideal)

        with self._stage(Stage.POLYHEDRON):
            polyhedron = polyhedron_of_ideal(ideal)
            closure = term_ideal(polyhedron)
            shape = polyhedron_model(polyhedron)
        with self._stage(Stage.LCT):
            lct = resolve_lct(
                ideal, e, change, self.seed, config.trials, config.coefficient_bound, config.degree_cap
            )
            verdict = self._verdict(ideal, polyhedron, e, nondegenerate)
        with self._stage(Stage.AUDIT):
            audit = audit_inequalities(ideal, e, lct, polyhedron, order)

        if audit.failures:
            logger.warning("⚠️ Audit failures: %s", ", ".join(audit.failures))
        logger.info("✓ Analysis done: e=%s DP=%s", e.values, render_rational(dp_sum(e)))
        return AnalysisReport(
            n=ideal.n,
            variables=list(ideal.variables),
            generators=list(ideal.rendered_generators()),
            is_monomial=ideal.is_monomial,
            ord=order,
            initial_ideal=[list(g) for g in initial.generators],
            colength=initial.colength(),
            mixed_multiplicities=[multiplicity_model(v) for v in vectors],
            e=e.e,
            dp=render_rational(dp_sum(e)),
            lct=lct_model(lct),
            arnold=None if lct.arnold is None else render_rational(lct.arnold),
            diagonal=diagonal_model(verdict),
            audit=audit_model(audit),
            polyhedron=shape,
            term_ideal=[list(g) for g in closure.generators],
            metadata=self._metadata(change),
        )

    def diagonal(
        self,
        ideal: IdealPresentation,
        change: Optional[LinearChange] = None,
        nondegenerate: bool = False,
    ) -> DiagonalReport:
        config = self.config
        self._require_finite(ideal)
        e, _ = self._multiplicities(ideal)
        with self._stage(Stage.LCT):
            polyhedron = polyhedron_of_ideal(ideal)
            lct = resolve_lct(
                ideal, e, change, self.seed, config.trials, config.coefficient_bound, config.degree_cap
            )
            verdict = self._verdict(ideal, polyhedron, e, nondegenerate)
        logger.info("✓ Diagonality: %s (%s)", verdict.verdict, verdict.reason)
        return DiagonalReport(
            generators=list(ideal.rendered_generators()),
            dp=render_rational(dp_sum(e)),
            lct_upper=render_rational(lct.upper_bound),
            diagonal=diagonal_model(verdict),
            metadata=self._metadata(change),
        )

    def milnor(self, ideal: IdealPresentation) -> MilnorReport:
        """Milnor vector of the single polynomial in the file."""
        if len(ideal.generators) != 1:
            raise IdealSyntaxError(f"milnor expects one polynomial, got {len(ideal.generators)}")
        f = ideal.generators[0]
        config = self.config
        jacobian = jacobian_ideal(f, ideal.variables)
        with self._stage(Stage.MULTIPLICITY):
            vector = milnor_vector(
                f, self.seed, config.trials, config.coefficient_bound, config.degree_cap, ideal.variables
            )
        logger.info("✓ Milnor vector: %s", vector.values)
        return MilnorReport(
            polynomial=f.render(ideal.variables),
            jacobian=list(jacobian.rendered_generators()),
            milnor_vector=multiplicity_model(vector),
            milnor_number=vector.e,
            dp=render_rational(dp_sum(vector)),
            metadata=self._metadata(),
        )

    def compare(self, first: IdealPresentation, second: IdealPresentation) -> ComparisonReport:
        """DP comparison of two monomial ideals with the first inside the second."""
        with self._stage(Stage.MULTIPLICITY):
            comparison = rees_compare(first, second)
        return ComparisonReport(
            first=list(first.rendered_generators()),
            second=list(second.rendered_generators()),
            e_first=list(comparison.e_first),
            e_second=list(comparison.e_second),
            dp_first=render_rational(comparison.dp_first),
            dp_second=render_rational(comparison.dp_second),
            dp_monotone=comparison.dp_monotone,
            equality_iff_same_closure=comparison.equality_iff_same_closure,
            polyhedra_equal=comparison.polyhedra_equal,
        )

    def converge(
        self,
        ideal: IdealPresentation,
        t_max: int,
        identity: bool = False,
        change: Optional[LinearChange] = None,
        known_lct: Optional[Fraction] = None,
    ):
        """
        Convergence table for M_t = ini(phi*(I)^t).

        The exact lct(I), when resolvable (monomial input, a collapsing
        sandwich or a collapsing user change), enables the lct bound column.

        Returns:
            (ConvergenceTable, ConvergenceReport)
        """
        config = self.config
        self._require_finite(ideal)
        if known_lct is None:
            with self._stage(Stage.LCT):
                known_lct = resolve_lct(
                    ideal, None, change, self.seed, config.trials, config.coefficient_bound, config.degree_cap
                ).exact
        with self._stage(Stage.EXPERIMENT):
            table = convergence_experiment(
                ideal,
                t_max,
                self.seed,
                identity=identity,
                known_lct=known_lct,
                trials=config.trials,
                bound=config.coefficient_bound,
                change_bound=config.change_bound,
                degree_cap=config.degree_cap,
                tmax_cap=config.tmax_cap,
                power_cap=config.power_cap,
            )
        report = ConvergenceReport(
            generators=list(ideal.rendered_generators()),
            change=table.change.render(),
            dp=render_rational(table.dp),
            known_lct=None if known_lct is None else render_rational(known_lct),
            rows=[
                ConvergenceRowModel(
                    t=row.t,
                    initial_ideal=[list(g) for g in row.initial_generators],
                    t_dp=render_rational(row.t_dp),
                    t_lct=render_rational(row.t_lct),
                    scaled_e=[render_rational(v) for v in row.scaled_e],
                    dp_le_lct=row.dp_le_lct,
                    lct_le_known=row.lct_le_known,
                    gap=render_rational(row.gap),
                )
                for row in table.rows
            ],
            trend=table.trend,
            error=table.error,
            metadata=self._metadata(change),
        )
        return table, report

    def oracle(self, ideal: IdealPresentation) -> OracleReport:
        with self._stage(Stage.ORACLE):
            record = run_oracles(ideal, self.config.grid, self.config.degree_cap)
        return OracleReport(
            generators=list(ideal.rendered_generators()),
            covolume=render_rational(record.covolume),
            shoelace=None if record.shoelace is None else render_rational(record.shoelace),
            shoelace_match=record.shoelace_match,
            lattice=[
                LatticeEstimateModel(
                    scale=item.scale,
                    estimate=render_rational(item.estimate),
                    error=render_rational(item.error),
                )
                for item in record.lattice
            ],
            lattice_trend=record.lattice_trend,
            staircase_colength=record.staircase_colength,
            mora_colength=record.mora_colength,
            colength_match=record.colength_match,
        )

    def corpus(self, count: int = 200, n: Optional[int] = None):
        """
        Randomized property suites.

        Returns:
            (CorpusSummary, CorpusReport)
        """
        with self._stage(Stage.CORPUS):
            summary = run_corpus(self.seed, count, self.config, n)
        report = CorpusReport(
            seed=summary.seed,
            counts=dict(summary.counts),
            checks_run=summary.checks_run,
            violations=[
                FindingModel(suite=f.suite, index=f.index, check=f.check, detail=f.detail)
                for f in summary.violations
            ],
        )
        return summary, report
