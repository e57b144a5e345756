"""
Oracles - brute-force cross-checks that share no code path with the analytic engine
Staircase box counts, shoelace areas, lattice-point covolume estimates, truncated linear algebra
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import DegreeCapExceeded, InfiniteColengthError, NotMonomialError
from core.ideal import IdealPresentation
from core.linalg import rank
from core.monomial_ideal import MonomialIdeal, exponents_of_degree
from core.polynomial import ExponentVector, render_rational
from core.standard_basis import DEFAULT_DEGREE_CAP, colength
from invariants.lct import FAIL, PASS
from invariants.newton import NewtonPolyhedron, covolume, newton_polyhedron

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


# ----- colength -----------------------------------------------------------

def staircase_colength(ideal: MonomialIdeal) -> int:
    """Number of exponents in the axis box that no generator divides."""
    return len(ideal.standard_monomials())


def truncated_colength(ideal: IdealPresentation, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """
    dim O_n / I by linear algebra on truncations.

    d(N) = dim O_n / (I + m^N) is the number of monomials of degree < N
    minus the rank of all truncated multiples x^a * g. Once d(N) equals
    d(N+1), m^N lies in I and d(N) is the colength.

    Raises:
        DegreeCapExceeded: no stabilization before degree_cap (infinite colength)
    """
    n = ideal.n
    previous: Optional[int] = None
    for N in range(1, degree_cap + 2):
        columns: Dict[ExponentVector, int] = {}
        for d in range(N):
            for e in exponents_of_degree(n, d):
                columns[e] = len(columns)
        rows: List[List[int]] = []
        for g in ideal.generators:
            low = g.order()
            for d in range(N - low):
                for shift in exponents_of_degree(n, d):
                    row = [0] * len(columns)
                    for exponent, coeff in g.shift(shift).terms():
                        if sum(exponent) < N:
                            row[columns[exponent]] = coeff
                    rows.append(row)
        current = len(columns) - (rank(rows) if rows else 0)
        logger.debug("truncated colength: N=%d d(N)=%d", N, current)
        if previous is not None and current == previous:
            return current
        previous = current
    raise DegreeCapExceeded(degree_cap + 1, degree_cap)


# ----- covolume -----------------------------------------------------------

def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> List[Point]:
    """Lower convex chain from the leftmost to the rightmost point (monotone chain)."""
    ordered = sorted(set(map(tuple, points)))
    lower: List[Point] = []
    for p in ordered:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return lower


def shoelace_covolume(ideal: MonomialIdeal) -> Fraction:
    """Area between the axes and the Newton boundary of a plane monomial ideal."""
    if ideal.n != 2:
        raise ValueError("the shoelace oracle only handles two variables")
    if not ideal.is_finite_colength:
        raise InfiniteColengthError("complement is unbounded: some axis has no pure power")
    chain = lower_hull(ideal.generators)
    polygon = [(0, 0)] + list(reversed(chain))
    twice = 0
    for (x0, y0), (x1, y1) in zip(polygon, polygon[1:] + polygon[:1]):
        twice += x0 * y1 - x1 * y0
    return Fraction(abs(twice), 2)


def _ceil_div(numerator: int, denominator: int) -> int:
    return -((-numerator) // denominator)


def lattice_covolume(polyhedron: NewtonPolyhedron, scale: int) -> Fraction:
    """
    Covolume estimate from the grid (1/scale) Z^n.

    Counts grid points outside Gamma_+ column by column along the last
    axis. The cells anchored at those points cover the complement, so the
    estimate is an upper bound that does not grow when the scale doubles.
    """
    if scale < 1:
        raise ValueError("grid scale must be positive")
    if not polyhedron.facets:
        return Fraction(0)
    intercepts = polyhedron.axis_intercepts()
    n = polyhedron.n
    facets = polyhedron.facets
    count = 0
    for prefix in product(*(range(scale * a) for a in intercepts[:-1])):
        height = 0
        for f in facets:
            head = sum(v * k for v, k in zip(f.normal[:-1], prefix))
            height = max(height, _ceil_div(scale * f.rhs - head, f.normal[-1]))
        count += height
    return Fraction(count, scale ** n)


@dataclass(frozen=True)
class LatticeEstimate:
    scale: int
    estimate: Fraction
    error: Fraction


def lattice_series(polyhedron: NewtonPolyhedron, scales: Sequence[int]) -> Tuple[List[LatticeEstimate], str]:
    """Estimates at each scale with the verdict of the error trend."""
    exact = covolume(polyhedron)
    series = []
    for s in scales:
        estimate = lattice_covolume(polyhedron, s)
        series.append(LatticeEstimate(s, estimate, estimate - exact))
    errors = [item.error for item in series]
    monotone = all(e >= 0 for e in errors) and all(b <= a for a, b in zip(errors, errors[1:]))
    return series, PASS if monotone else FAIL


def grid_scales(grid: int) -> Tuple[int, ...]:
    """The configured scale flanked by its half and its double."""
    return tuple(s for s in (grid // 2, grid, grid * 2) if s >= 1)


# ----- oracle record ------------------------------------------------------

@dataclass(frozen=True)
class OracleRecord:
    ideal: MonomialIdeal
    covolume: Fraction
    shoelace: Optional[Fraction]
    lattice: Tuple[LatticeEstimate, ...]
    lattice_trend: str
    staircase_colength: int
    mora_colength: int

    @property
    def shoelace_match(self) -> Optional[str]:
        if self.shoelace is None:
            return None
        return PASS if self.shoelace == self.covolume else FAIL

    @property
    def colength_match(self) -> str:
        return PASS if self.staircase_colength == self.mora_colength else FAIL

    @property
    def agrees(self) -> bool:
        return (
            self.shoelace_match != FAIL
            and self.lattice_trend == PASS
            and self.colength_match == PASS
        )


def run_oracles(
    ideal: IdealPresentation, grid: int = 16, degree_cap: int = DEFAULT_DEGREE_CAP
) -> OracleRecord:
    """
    Every oracle on a monomial ideal, next to the analytic values.

    Raises:
        NotMonomialError: the presentation has a non-monomial generator
    """
    if not ideal.is_monomial:
        raise NotMonomialError("oracles need a monomial ideal")
    monomial = MonomialIdeal(ideal.monomial_exponents(), ideal.n)
    if not monomial.is_finite_colength:
        raise InfiniteColengthError("oracles need finite colength")
    polyhedron = newton_polyhedron(monomial.generators)
    exact = covolume(polyhedron)
    shoelace = shoelace_covolume(monomial) if ideal.n == 2 else None
    lattice, trend = lattice_series(polyhedron, grid_scales(grid))
    record = OracleRecord(
        ideal=monomial,
        covolume=exact,
        shoelace=shoelace,
        lattice=tuple(lattice),
        lattice_trend=trend,
        staircase_colength=staircase_colength(monomial),
        mora_colength=colength(ideal, degree_cap),
    )
    if record.agrees:
        logger.info("✓ Oracles agree: covolume %s", render_rational(exact))
    else:
        logger.warning("⚠️ Oracle disagreement on covolume %s", render_rational(exact))
    return record
