"""
LCT and DP - log canonical thresholds, the DP sum, diagonality and the inequality audit
Howald's formula for monomial ideals; exact bounds DP(I) <= lct(I) <= lct(I^0) otherwise
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from core.errors import (
    ContainmentError,
    InfiniteColengthError,
    InternalConsistencyError,
    NonPositiveEntryError,
    NotMonomialError,
)
from core.ideal import IdealPresentation
from core.ideal_ops import DEFAULT_COEFFICIENT_BOUND, LinearChange, apply_linear_change
from core.monomial_ideal import MonomialIdeal
from core.polynomial import render_rational
from core.standard_basis import DEFAULT_DEGREE_CAP
from invariants.multiplicity import (
    MixedMultiplicityVector,
    mixed_multiplicities,
    mixed_multiplicities_polyhedral,
)
from invariants.newton import (
    NewtonPolyhedron,
    diagonal_witness,
    member,
    newton_polyhedron,
    polyhedra_equal,
    polyhedron_of_ideal,
    simplex_polyhedron,
)

logger = logging.getLogger(__name__)

PROBE_EPSILON = Fraction(1, 1000)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class LctResult:
    """Exact lct when known, always with the sandwich [DP(I), lct(I^0)]."""

    lower_bound: Fraction
    upper_bound: Fraction
    exact: Optional[Fraction] = None

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise InternalConsistencyError(
                f"lct bounds out of order: {self.lower_bound} > {self.upper_bound}"
            )
        if self.exact is not None and not self.lower_bound <= self.exact <= self.upper_bound:
            raise InternalConsistencyError(f"lct {self.exact} outside its bounds")

    @property
    def arnold(self) -> Optional[Fraction]:
        """Arnold multiplicity 1/lct."""
        return None if self.exact is None else 1 / self.exact


@dataclass(frozen=True)
class DpPoint:
    """A positive rational vector t = (t_1, ..., t_n)."""

    t: Tuple[Fraction, ...]

    def __post_init__(self):
        t = tuple(Fraction(v) for v in self.t)
        if not t or any(v <= 0 for v in t):
            raise NonPositiveEntryError(f"DP points need positive entries, got {self.t}")
        object.__setattr__(self, "t", t)


# ----- Howald -------------------------------------------------------------

def howald_threshold(polyhedron: NewtonPolyhedron) -> Fraction:
    """mu_0 = min{mu > 0 : mu*(1,...,1) in Gamma_+}."""
    if not polyhedron.is_convenient:
        raise InfiniteColengthError("lct of a monomial ideal needs finite colength")
    if not polyhedron.facets:
        raise InfiniteColengthError("the unit ideal has no finite threshold")
    return max(Fraction(f.rhs, sum(f.normal)) for f in polyhedron.facets)


def lct_monomial(polyhedron: NewtonPolyhedron) -> Fraction:
    """1/mu_0 by Howald's diagonal intersection."""
    return 1 / howald_threshold(polyhedron)


def howald_probe(polyhedron: NewtonPolyhedron, epsilon: Fraction = PROBE_EPSILON) -> Dict[str, object]:
    """mu_0 * 1 lies on Gamma_+, (mu_0 - epsilon) * 1 does not."""
    mu = howald_threshold(polyhedron)
    n = polyhedron.n
    return {
        "mu0": mu,
        "on_boundary": member(polyhedron, [mu] * n),
        "inside_below": member(polyhedron, [max(mu - epsilon, Fraction(0))] * n),
    }


# ----- DP -----------------------------------------------------------------

def dp_function(point) -> Fraction:
    """f(t) = 1/t_1 + t_1/t_2 + ... + t_{n-1}/t_n."""
    t = point.t if isinstance(point, DpPoint) else DpPoint(tuple(point)).t
    total = 1 / t[0]
    for previous, current in zip(t, t[1:]):
        total += previous / current
    return total


def in_D(values: Sequence) -> bool:
    """t_1^2 <= t_2 and t_j^2 <= t_{j-1} t_{j+1}."""
    t = (Fraction(1),) + DpPoint(tuple(values)).t
    return all(t[j] ** 2 <= t[j - 1] * t[j + 1] for j in range(1, len(t) - 1))


def dp_sum(e: MixedMultiplicityVector) -> Fraction:
    """DP(I) = 1/e_1 + e_1/e_2 + ... + e_{n-1}/e_n."""
    values = e.values if isinstance(e, MixedMultiplicityVector) else tuple(e)
    return dp_function(DpPoint(tuple(Fraction(v) for v in values)))


# ----- diagonality --------------------------------------------------------

@dataclass(frozen=True)
class DiagonalVerdict:
    verdict: str
    witness: Optional[Tuple[int, ...]] = None
    reason: str = ""

    @property
    def is_diagonal(self) -> bool:
        return self.verdict == PASS


def _monomial(ideal) -> MonomialIdeal:
    if isinstance(ideal, MonomialIdeal):
        return ideal
    if not ideal.is_monomial:
        raise NotMonomialError("expected a monomial ideal")
    return MonomialIdeal(ideal.monomial_exponents(), ideal.n)


def is_diagonal(
    ideal, e: Optional[MixedMultiplicityVector] = None
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    Diagonality of a monomial ideal, decided twice.

    Numerically by lct(I^0) == DP(I) and geometrically by the diagonal
    witness of Gamma_+(I); the two must agree.
    """
    ideal = _monomial(ideal)
    if not ideal.is_finite_colength:
        raise InfiniteColengthError("diagonality needs finite colength")
    polyhedron = newton_polyhedron(ideal.generators)
    e = e or mixed_multiplicities_polyhedral(ideal)
    numeric = lct_monomial(polyhedron) == dp_sum(e)
    witness = diagonal_witness(polyhedron)
    if numeric != (witness is not None):
        raise InternalConsistencyError(
            f"diagonality cross-check failed: numeric={numeric}, witness={witness}"
        )
    if witness is not None:
        t = e.with_unit()
        ratios = [Fraction(t[i], t[i - 1]) for i in range(1, len(t))]
        if ratios != sorted(Fraction(a) for a in witness):
            raise InternalConsistencyError(
                f"witness {witness} does not match e-vector ratios {[str(r) for r in ratios]}"
            )
    return numeric, witness


def decide_diagonal(
    polyhedron: NewtonPolyhedron,
    e: MixedMultiplicityVector,
    is_monomial: bool,
    nondegenerate: bool = False,
) -> DiagonalVerdict:
    """
    Diagonality verdict for any presentation.

    Sampled e-vectors never undershoot, so DP from them never overshoots
    and equality with lct(I^0) certifies diagonality.
    """
    witness = diagonal_witness(polyhedron)
    upper = lct_monomial(polyhedron)
    dp = dp_sum(e)
    if is_monomial:
        if dp == upper:
            return DiagonalVerdict(PASS, witness, "lct(I^0) == DP(I)")
        return DiagonalVerdict(FAIL, None, f"lct(I^0) = {upper} > DP(I) = {dp}")
    if dp == upper:
        return DiagonalVerdict(PASS, witness, "lct(I^0) == DP(I)")
    if nondegenerate and witness is not None:
        return DiagonalVerdict(PASS, witness, "diagonal Newton polyhedron and asserted non-degeneracy")
    if e.stable:
        return DiagonalVerdict(FAIL, None, f"lct(I^0) = {upper} > DP(I) = {dp}")
    return DiagonalVerdict(UNDETERMINED, None, "generic trials disagree; DP(I) may be underestimated")


# ----- audit --------------------------------------------------------------

@dataclass(frozen=True)
class AuditCheck:
    verdict: str
    quantities: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class AuditRecord:
    multiplicity_chain: AuditCheck
    dp_le_lct: AuditCheck
    am_gm: AuditCheck
    maximal_equality: AuditCheck

    def checks(self) -> Dict[str, AuditCheck]:
        return {
            "multiplicity_chain": self.multiplicity_chain,
            "dp_le_lct": self.dp_le_lct,
            "am_gm": self.am_gm,
            "maximal_equality": self.maximal_equality,
        }

    @property
    def failures(self) -> Tuple[str, ...]:
        return tuple(name for name, check in self.checks().items() if check.verdict == FAIL)


def _verdict(condition: bool) -> str:
    return PASS if condition else FAIL


def audit_inequalities(
    ideal: IdealPresentation,
    e: MixedMultiplicityVector,
    lct: LctResult,
    polyhedron: NewtonPolyhedron,
    ord_value: int,
) -> AuditRecord:
    """Check the multiplicity chain, DP <= lct, AM-GM and the maximal equality case."""
    n = ideal.n
    t = e.with_unit()
    chain = AuditCheck(
        _verdict(e.chain_holds()),
        {f"e{j}^2 vs e{j-1}*e{j+1}": f"{t[j] ** 2} <= {t[j-1] * t[j+1]}" for j in range(1, n)},
    )

    dp = dp_sum(e)
    reference = lct.exact if lct.exact is not None else lct.upper_bound
    dp_le_lct = AuditCheck(
        _verdict(dp <= reference),
        {
            "dp": render_rational(dp),
            "lct" if lct.exact is not None else "lct_upper": render_rational(reference),
        },
    )

    product = e.e * dp ** n
    am_gm = AuditCheck(
        _verdict(n ** n <= product),
        {"n^n": str(n ** n), "e*dp^n": render_rational(product)},
    )

    target = Fraction(n, ord_value)
    equality = dp == reference == target if lct.exact is not None else dp == target
    if ideal.is_monomial:
        closure_is_power = polyhedra_equal(polyhedron, simplex_polyhedron(n, ord_value))
    else:
        # I inside m^ord with e(I) = e(m^ord) means equal integral closures
        closure_is_power = e.e == ord_value ** n
    quantities = {"dp": render_rational(dp), "n/ord": render_rational(target)}
    if closure_is_power:
        maximal = AuditCheck(_verdict(equality), quantities)
    elif equality:
        maximal = AuditCheck(FAIL if e.stable else UNDETERMINED, quantities)
    else:
        maximal = AuditCheck(NOT_APPLICABLE, quantities)
    return AuditRecord(chain, dp_le_lct, am_gm, maximal)


# ----- Rees-type comparison -----------------------------------------------

@dataclass(frozen=True)
class ReesComparison:
    dp_first: Fraction
    dp_second: Fraction
    e_first: Tuple[int, ...]
    e_second: Tuple[int, ...]
    dp_monotone: str
    equality_iff_same_closure: str
    polyhedra_equal: bool


def rees_compare(first, second) -> ReesComparison:
    """
    DP(I1) <= DP(I2) for I1 inside I2, with equality exactly when the
    integral closures (Newton polyhedra) agree.
    """
    first, second = _monomial(first), _monomial(second)
    if not second.contains_ideal(first):
        raise ContainmentError("first ideal is not contained in the second")
    e1 = mixed_multiplicities_polyhedral(first)
    e2 = mixed_multiplicities_polyhedral(second)
    dp1, dp2 = dp_sum(e1), dp_sum(e2)
    same = polyhedra_equal(newton_polyhedron(first.generators), newton_polyhedron(second.generators))
    return ReesComparison(
        dp1,
        dp2,
        e1.values,
        e2.values,
        _verdict(dp1 <= dp2),
        _verdict((dp1 == dp2) == same),
        same,
    )


# ----- sandwich -----------------------------------------------------------

def sandwich(ideal: IdealPresentation, e: MixedMultiplicityVector) -> LctResult:
    """[DP(I), lct(I^0)], exact when monomial or when the bounds meet."""
    upper = lct_monomial(polyhedron_of_ideal(ideal))
    lower = dp_sum(e)
    exact = upper if ideal.is_monomial or lower == upper else None
    return LctResult(lower, upper, exact)


def resolve_lct(
    ideal: IdealPresentation,
    e: Optional[MixedMultiplicityVector] = None,
    change: Optional[LinearChange] = None,
    seed: int = 0,
    trials: int = 3,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> LctResult:
    """
    Sandwich of I, tightened by lct((phi*I)^0) when a change phi is given.

    lct and the mixed multiplicities are invariant under linear changes,
    so a change that makes the bounds meet pins the exact value.
    """
    e = e or mixed_multiplicities(ideal, seed, trials, bound, degree_cap)
    result = sandwich(ideal, e)
    if result.exact is not None or change is None:
        return result
    moved = sandwich(apply_linear_change(ideal, change), e)
    upper = min(result.upper_bound, moved.upper_bound)
    exact = result.lower_bound if result.lower_bound == upper else None
    if exact is not None:
        logger.info("✓ Linear change collapses the lct sandwich at %s", render_rational(exact))
    return LctResult(result.lower_bound, upper, exact)
