"""
Convergence - degenerate a generic coordinate change of I^t to its initial ideal
t * DP(ini(phi*(I)^t)) tends to DP(I); t * lct(ini(phi*(I)^t)) never exceeds lct(I)
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from core.errors import DegreeCapExceeded, PowerCapExceeded
from core.ideal import IdealPresentation
from core.ideal_ops import DEFAULT_COEFFICIENT_BOUND, DEFAULT_POWER_CAP, LinearChange, apply_linear_change, ideal_power
from core.polynomial import render_rational
from core.standard_basis import DEFAULT_DEGREE_CAP, initial_ideal
from invariants.lct import FAIL, NOT_APPLICABLE, PASS, dp_sum, lct_monomial
from invariants.multiplicity import mixed_multiplicities, mixed_multiplicities_polyhedral
from invariants.newton import newton_polyhedron

logger = logging.getLogger(__name__)

DEFAULT_TMAX_CAP = 4
DEFAULT_CHANGE_BOUND = 9


@dataclass(frozen=True)
class ConvergenceRow:
    t: int
    initial_generators: Tuple[Tuple[int, ...], ...]
    t_dp: Fraction
    t_lct: Fraction
    scaled_e: Tuple[Fraction, ...]
    dp_le_lct: str
    lct_le_known: str
    gap: Fraction


@dataclass(frozen=True)
class ConvergenceTable:
    rows: Tuple[ConvergenceRow, ...]
    seed: int
    change: LinearChange
    dp: Fraction
    known_lct: Optional[Fraction]
    trend: str
    error: Optional[str] = None

    @property
    def bounds_hold(self) -> bool:
        return all(r.dp_le_lct == PASS and r.lct_le_known != FAIL for r in self.rows)

    def as_rows(self) -> List[List[str]]:
        header = ["t", "t*DP(M_t)", "t*lct(M_t)", "dp<=lct", "lct<=known", "gap", "e_j(M_t)/t^j"]
        body = [
            [
                str(r.t),
                render_rational(r.t_dp),
                render_rational(r.t_lct),
                r.dp_le_lct,
                r.lct_le_known,
                render_rational(r.gap),
                ",".join(render_rational(v) for v in r.scaled_e),
            ]
            for r in self.rows
        ]
        return [header] + body


def _trend(gaps: List[Fraction]) -> str:
    if all(later <= earlier for earlier, later in zip(gaps, gaps[1:])):
        return "nonincreasing"
    return "mixed"


def convergence_experiment(
    ideal: IdealPresentation,
    t_max: int,
    seed: int = 0,
    *,
    identity: bool = False,
    known_lct: Optional[Fraction] = None,
    trials: int = 3,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    change_bound: int = DEFAULT_CHANGE_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    tmax_cap: int = DEFAULT_TMAX_CAP,
    power_cap: int = DEFAULT_POWER_CAP,
) -> ConvergenceTable:
    """
    Rows (t, t*DP(M_t), t*lct(M_t)) for M_t = ini(phi*(I)^t), t = 1..t_max.

    Args:
        ideal: finite colength presentation
        t_max: last power, at most tmax_cap
        seed: seeds the random change phi and the e-vector of I
        identity: use phi = identity instead of a random change
        known_lct: exact lct(I) when known; enables the lct bound column

    Returns:
        ConvergenceTable: rows computed so far; `error` is set when the
        degree cap stopped the run early
    """
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    if t_max > tmax_cap:
        raise PowerCapExceeded(f"t_max {t_max} exceeds the configured cap {tmax_cap}")
    n = ideal.n
    change = LinearChange.identity(n) if identity else LinearChange.random(n, random.Random(seed), change_bound)
    moved = apply_linear_change(ideal, change)
    dp = dp_sum(mixed_multiplicities(ideal, seed, trials, bound, degree_cap))

    rows: List[ConvergenceRow] = []
    error = None
    for t in range(1, t_max + 1):
        try:
            degeneration = initial_ideal(ideal_power(moved, t, power_cap), degree_cap)
        except DegreeCapExceeded as e:
            error = f"t={t}: {e}"
            logger.warning("⚠️ Convergence run stopped early at %s", error)
            break
        polyhedron = newton_polyhedron(degeneration.generators)
        e = mixed_multiplicities_polyhedral(degeneration)
        t_dp = t * dp_sum(e)
        t_lct = t * lct_monomial(polyhedron)
        if known_lct is None:
            lct_verdict = NOT_APPLICABLE
        else:
            lct_verdict = PASS if t_lct <= known_lct else FAIL
        rows.append(
            ConvergenceRow(
                t=t,
                initial_generators=degeneration.generators,
                t_dp=t_dp,
                t_lct=t_lct,
                scaled_e=tuple(Fraction(v, t ** j) for j, v in enumerate(e.values, start=1)),
                dp_le_lct=PASS if t_dp <= t_lct else FAIL,
                lct_le_known=lct_verdict,
                gap=abs(t_dp - dp),
            )
        )
        logger.info("✓ t=%d: t*DP=%s t*lct=%s", t, render_rational(t_dp), render_rational(t_lct))
    trend = _trend([r.gap for r in rows])
    return ConvergenceTable(tuple(rows), seed, change, dp, known_lct, trend, error)
