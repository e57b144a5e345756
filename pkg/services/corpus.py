"""
Corpus - randomized property suites over monomial ideals, polynomial ideals and the set D
Every draw is seeded per (suite, index); ideals are processed sequentially in index order
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.errors import InfiniteColengthError, LctForgeError
from core.ideal import IdealPresentation
from core.ideal_ops import ideal_power
from core.local_order import VariableSubset, project
from core.monomial_ideal import MonomialIdeal, exponents_of_degree
from core.polynomial import Polynomial, render_rational
from core.standard_basis import colength, initial_ideal
from invariants.lct import (
    PASS,
    audit_inequalities,
    dp_function,
    dp_sum,
    in_D,
    is_diagonal,
    lct_monomial,
    sandwich,
)
from invariants.multiplicity import mixed_multiplicities_generic, mixed_multiplicities_polyhedral, ord_
from invariants.newton import covolume, newton_polyhedron, polyhedra_equal, simplex_polyhedron, term_ideal
from services.config import OracleConfig
from services.oracles import grid_scales, lattice_series, shoelace_covolume, staircase_colength, truncated_colength

logger = logging.getLogger(__name__)

MONOMIAL = "monomial"
POLYNOMIAL = "polynomial"
D_FUNCTION = "d-function"

MAX_GENERATORS = 6
MAX_MONOMIAL_DEGREE = 8
MAX_POLYNOMIAL_DEGREE = 5
POLYNOMIAL_COEFFICIENT_BOUND = 3
LAMBDAS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))

_SUITE_OFFSETS = {MONOMIAL: 1, POLYNOMIAL: 2, D_FUNCTION: 3}


def suite_rng(seed: int, suite: str, index: int) -> random.Random:
    """Independent generator per corpus item, stable under changes of the count."""
    return random.Random((seed * 1_000_003 + index) * 8 + _SUITE_OFFSETS[suite])


# ----- random ideals ------------------------------------------------------

def random_monomial_ideal(rng: random.Random, n: int) -> MonomialIdeal:
    """Pure powers on every axis plus mixed monomials, at most six generators of degree <= 8."""
    generators = []
    for i in range(n):
        a = rng.randint(1, MAX_MONOMIAL_DEGREE)
        generators.append(tuple(a if j == i else 0 for j in range(n)))
    for _ in range(rng.randint(0, max(0, MAX_GENERATORS - n))):
        degree = rng.randint(2, MAX_MONOMIAL_DEGREE)
        generators.append(rng.choice(list(exponents_of_degree(n, degree))))
    return MonomialIdeal(tuple(generators), n)


def _random_polynomial(rng: random.Random, n: int) -> Polynomial:
    terms: Dict[Tuple[int, ...], int] = {}
    for _ in range(rng.randint(1, 4)):
        degree = rng.randint(1, MAX_POLYNOMIAL_DEGREE)
        exponent = rng.choice(list(exponents_of_degree(n, degree)))
        coeff = rng.choice([c for c in range(-POLYNOMIAL_COEFFICIENT_BOUND, POLYNOMIAL_COEFFICIENT_BOUND + 1) if c])
        terms[exponent] = coeff
    return Polynomial.from_terms(n, terms)


def random_polynomial_ideal(rng: random.Random, n: int = 2, degree_cap: int = 64) -> IdealPresentation:
    """Two or three sparse generators vanishing at 0, redrawn until the colength is finite."""
    while True:
        generators = [_random_polynomial(rng, n) for _ in range(rng.randint(2, 3))]
        generators = [g for g in generators if not g.is_zero()]
        if not generators:
            continue
        ideal = IdealPresentation(tuple(generators))
        try:
            if initial_ideal(ideal, degree_cap).is_finite_colength:
                return ideal
        except LctForgeError:
            continue


def random_d_point(rng: random.Random, n: int) -> Tuple[Fraction, ...]:
    """A point of D, built from nondecreasing successive ratios."""
    ratios = sorted(Fraction(rng.randint(1, 40), rng.randint(1, 10)) for _ in range(n))
    return _from_ratios(ratios)


def _from_ratios(ratios: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    point = []
    value = Fraction(1)
    for r in ratios:
        value *= r
        point.append(value)
    return tuple(point)


def _ratios(point: Sequence[Fraction]) -> List[Fraction]:
    previous = Fraction(1)
    ratios = []
    for value in point:
        ratios.append(value / previous)
        previous = value
    return ratios


def dominating_d_point(rng: random.Random, point: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """A point of D that is componentwise >= the given one."""
    raised = []
    for r in _ratios(point):
        bumped = r + Fraction(rng.randint(0, 5), rng.randint(1, 5))
        raised.append(max([bumped] + raised[-1:]))
    return _from_ratios(raised)


# ----- findings -----------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    suite: str
    index: int
    check: str
    detail: str


@dataclass
class CorpusSummary:
    seed: int
    counts: Dict[str, int] = field(default_factory=dict)
    checks_run: int = 0
    check_counts: Dict[str, int] = field(default_factory=dict)
    violations: List[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, suite: str, index: int, name: str, condition: bool, detail: Callable[[], str]):
        self.checks_run += 1
        self.check_counts[name] = self.check_counts.get(name, 0) + 1
        if not condition:
            finding = Finding(suite, index, name, detail())
            self.violations.append(finding)
            logger.warning("⚠️ %s #%d %s: %s", suite, index, name, finding.detail)

    def guard(self, suite: str, index: int, run: Callable[[], None]):
        """Run one item's checks; an error counts as a violation of that item."""
        try:
            run()
        except LctForgeError as e:
            self.checks_run += 1
            self.violations.append(Finding(suite, index, "error", f"{type(e).__name__}: {e}"))
            logger.warning("⚠️ %s #%d raised %s", suite, index, e)


# ----- suites -------------------------------------------------------------

def _monomial_checks(
    summary: CorpusSummary, index: int, ideal: MonomialIdeal, config: OracleConfig, seed: int
):
    suite = MONOMIAL
    n = ideal.n
    presentation = ideal.to_presentation()
    polyhedron = newton_polyhedron(ideal.generators)
    e = mixed_multiplicities_polyhedral(ideal)
    order = ideal.order()
    check = partial(summary.check, suite, index)

    check("e1-is-ord", e.values[0] == order, lambda: f"e_1 = {e.values[0]}, ord = {order}")
    check("multiplicity-chain", e.chain_holds() and in_D(e.values), lambda: f"e = {e.values}")

    dp = dp_sum(e)
    lct = lct_monomial(polyhedron)
    check("dp-le-lct", dp <= lct, lambda: f"DP = {render_rational(dp)} > lct = {render_rational(lct)}")
    check("am-gm", n ** n <= e.e * dp ** n, lambda: f"e*DP^n = {render_rational(e.e * dp ** n)} < {n ** n}")

    closure_is_power = polyhedra_equal(polyhedron, simplex_polyhedron(n, order))
    audit = audit_inequalities(presentation, e, sandwich(presentation, e), polyhedron, order)
    fires = audit.maximal_equality.verdict == PASS
    check(
        "maximal-equality",
        fires == closure_is_power and fires == (dp == lct == Fraction(n, order)),
        lambda: f"audit {audit.maximal_equality.verdict}, closure is m^{order}: {closure_is_power}",
    )

    generic = mixed_multiplicities_generic(
        presentation, seed, config.trials, config.coefficient_bound, config.degree_cap
    )
    check("two-path-e", generic.values == e.values, lambda: f"generic {generic.values} vs polyhedral {e.values}")

    diagonal, witness = is_diagonal(ideal, e)
    check("diagonal-witness", diagonal == (witness is not None), lambda: f"{diagonal} with witness {witness}")

    closure = term_ideal(polyhedron)
    check(
        "term-ideal-polyhedron",
        polyhedra_equal(newton_polyhedron(closure.generators), polyhedron),
        lambda: f"term ideal {closure.generators}",
    )

    base = covolume(polyhedron)
    for t in (2, 3):
        dilated = covolume(polyhedron.dilate(t))
        check(
            f"dilation-{t}",
            dilated == t ** n * base,
            lambda: f"covolume(t*P) = {render_rational(dilated)}, t^n*covolume = {render_rational(t ** n * base)}",
        )

    counted = staircase_colength(ideal)
    check("staircase-colength", counted == ideal.colength(), lambda: f"{counted} vs {ideal.colength()}")

    if n == 2:
        area = shoelace_covolume(ideal)
        check("shoelace", area == base, lambda: f"shoelace {render_rational(area)} vs {render_rational(base)}")
    else:
        series, trend = lattice_series(polyhedron, grid_scales(config.grid))
        check(
            "lattice-trend",
            trend == PASS,
            lambda: "errors " + ", ".join(render_rational(s.error) for s in series),
        )


def monomial_suite(
    summary: CorpusSummary, count: int, config: OracleConfig, dimensions: Sequence[int] = (2, 3)
):
    for index in range(count):
        rng = suite_rng(summary.seed, MONOMIAL, index)
        n = rng.choice(list(dimensions))
        ideal = random_monomial_ideal(rng, n)
        summary.guard(MONOMIAL, index, lambda: _monomial_checks(summary, index, ideal, config, summary.seed + index))
    summary.counts[MONOMIAL] = count
    logger.info("✓ Monomial suite: %d ideals", count)


def _polynomial_checks(
    summary: CorpusSummary, index: int, ideal: IdealPresentation, config: OracleConfig, seed: int
):
    suite = POLYNOMIAL
    check = partial(summary.check, suite, index)
    cap = config.degree_cap

    initial = initial_ideal(ideal, cap)
    mora = colength(ideal, cap)
    direct = truncated_colength(ideal, cap)
    check("colength", mora == direct == initial.colength(), lambda: f"Mora {mora} vs truncated {direct}")

    generic = mixed_multiplicities_generic(ideal, seed, config.trials, config.coefficient_bound, cap)
    degenerate = mixed_multiplicities_polyhedral(initial)
    check(
        "semicontinuity",
        all(a <= b for a, b in zip(generic.values, degenerate.values)),
        lambda: f"e(I) = {generic.values}, e(ini(I)) = {degenerate.values}",
    )
    check("e1-is-ord", generic.values[0] == ord_(ideal), lambda: f"e_1 = {generic.values[0]}, ord = {ord_(ideal)}")

    n = ideal.n
    for j in range(1, n + 1):
        subset = VariableSubset.suffix(j, n)
        restricted = [project(g, subset) for g in ideal.generators]
        restricted = [g for g in restricted if not g.is_zero()]
        if not restricted:
            raise InfiniteColengthError(f"finite colength ideal vanishes on the suffix from x{j}")
        on_subset = initial_ideal(IdealPresentation(tuple(restricted)), cap)
        expected = initial.restrict_to(subset)
        check(
            f"suffix-{j}",
            on_subset.generators == expected.generators,
            lambda: f"ini(J_L) = {on_subset.generators}, ini(J)_L = {expected.generators}",
        )

    squared = initial_ideal(ideal_power(ideal, 2, config.power_cap), cap)
    check(
        "square-initial",
        squared.contains_ideal(initial * initial),
        lambda: f"ini(I^2) = {squared.generators}",
    )


def polynomial_suite(summary: CorpusSummary, count: int, config: OracleConfig):
    for index in range(count):
        rng = suite_rng(summary.seed, POLYNOMIAL, index)
        ideal = random_polynomial_ideal(rng, 2, config.degree_cap)
        summary.guard(POLYNOMIAL, index, lambda: _polynomial_checks(summary, index, ideal, config, summary.seed + index))
    summary.counts[POLYNOMIAL] = count
    logger.info("✓ Polynomial suite: %d ideals", count)


def d_suite(summary: CorpusSummary, count: int):
    """Monotonicity of f on D along the componentwise order, and convexity of D."""
    suite = D_FUNCTION
    for index in range(count):
        rng = suite_rng(summary.seed, suite, index)
        n = rng.choice([2, 3, 4])
        a = random_d_point(rng, n)
        b = dominating_d_point(rng, a)
        check = partial(summary.check, suite, index)
        check("in-d", in_D(a) and in_D(b), lambda: f"{a}, {b}")
        check("ordered", all(x <= y for x, y in zip(a, b)), lambda: f"{a} </= {b}")
        fa, fb = dp_function(a), dp_function(b)
        check(
            "monotone",
            fa >= fb and (fa == fb) == (a == b),
            lambda: f"f(a) = {render_rational(fa)}, f(b) = {render_rational(fb)}",
        )

        s, t = random_d_point(rng, n), random_d_point(rng, n)
        lam = rng.choice(LAMBDAS)
        mixed = tuple(lam * x + (1 - lam) * y for x, y in zip(s, t))
        check("convex", in_D(mixed), lambda: f"lambda = {lam}: {[render_rational(v) for v in mixed]}")
    summary.counts[suite] = count
    logger.info("✓ D suite: %d samples", count)


def suite_counts(count: int) -> Dict[str, int]:
    """Monomial count as given; polynomial and D suites scale with it."""
    return {
        MONOMIAL: count,
        POLYNOMIAL: max(1, count // 4),
        D_FUNCTION: max(1, count * 5 // 2),
    }


def run_corpus(
    seed: int = 0,
    count: int = 200,
    config: Optional[OracleConfig] = None,
    n: Optional[int] = None,
) -> CorpusSummary:
    """
    All three suites in a fixed order.

    Args:
        seed: corpus seed
        count: monomial ideals to draw (200 gives 50 polynomial ideals and 500 D samples)
        config: caps and trial counts
        n: restrict monomial ideals to this dimension (default: 2 and 3)
    """
    if count < 1:
        raise ValueError("corpus count must be positive")
    config = config or OracleConfig()
    summary = CorpusSummary(seed)
    counts = suite_counts(count)
    monomial_suite(summary, counts[MONOMIAL], config, (n,) if n else (2, 3))
    polynomial_suite(summary, counts[POLYNOMIAL], config)
    d_suite(summary, counts[D_FUNCTION])
    if summary.ok:
        logger.info("✓ Corpus clean: %d checks", summary.checks_run)
    else:
        logger.warning("❌ Corpus found %d violations", len(summary.violations))
    return summary
