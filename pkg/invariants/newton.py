"""
Newton Polyhedron - exact facet/vertex description of Gamma_+ for orthant-recession polyhedra
Gamma_+ = {x >= 0 : <v, x> >= c for every facet (v, c)}, normals primitive and >= 0
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, factorial
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from core.errors import (
    DimensionMismatchError,
    EmptyInputError,
    InfiniteColengthError,
    InternalConsistencyError,
    NegativeCoordinateError,
    UnsupportedDimensionError,
)
from core.ideal import IdealPresentation
from core.linalg import affine_rank, determinant, integer_nullspace, rank
from core.monomial_ideal import MonomialIdeal, minimalize
from core.polynomial import ExponentVector

logger = logging.getLogger(__name__)

MAX_DIMENSION = 6


@dataclass(frozen=True, order=True)
class Facet:
    """Supporting inequality <normal, x> >= rhs with rhs > 0."""

    normal: Tuple[int, ...]
    rhs: int

    def value(self, point: Sequence) -> Fraction:
        return sum((Fraction(v) * p for v, p in zip(self.normal, point)), Fraction(0))

    def is_tight(self, point: Sequence) -> bool:
        return self.value(point) == self.rhs

    @property
    def is_compact(self) -> bool:
        return all(v > 0 for v in self.normal)


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    vertices: Tuple[ExponentVector, ...]
    facets: Tuple[Facet, ...]

    @property
    def is_convenient(self) -> bool:
        """Every coordinate axis carries a vertex (finite covolume)."""
        on_axis = set()
        for v in self.vertices:
            nonzero = [i for i, a in enumerate(v) if a]
            if not nonzero:
                return True
            if len(nonzero) == 1:
                on_axis.add(nonzero[0])
        return len(on_axis) == self.n

    @property
    def compact_facets(self) -> Tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.is_compact)

    def contains(self, point: Sequence) -> bool:
        return member(self, point)

    def axis_intercepts(self) -> Tuple[int, ...]:
        """a_i with a_i e_i a vertex; requires a convenient polyhedron."""
        intercepts = [None] * self.n
        for v in self.vertices:
            nonzero = [i for i, a in enumerate(v) if a]
            if len(nonzero) == 1:
                intercepts[nonzero[0]] = v[nonzero[0]]
        if any(a is None for a in intercepts):
            raise InfiniteColengthError("polyhedron is not convenient: an axis has no vertex")
        return tuple(intercepts)

    def dilate(self, t: int) -> "NewtonPolyhedron":
        return newton_polyhedron([tuple(t * a for a in v) for v in self.vertices])


def _dot(v: Sequence, p: Sequence):
    return sum(a * b for a, b in zip(v, p))


def _candidate_facets(points: Sequence[ExponentVector], n: int) -> Set[Facet]:
    """
    Hyperplanes through n - |Z| affinely independent points, parallel to
    the coordinate rays e_i for i in Z, that support every point.
    """
    facets: Set[Facet] = set()
    coordinates = range(n)
    for zeros in range(n):
        for zero_set in combinations(coordinates, zeros):
            free = [i for i in coordinates if i not in zero_set]
            k = len(free)
            for chosen in combinations(points, k):
                rows = [[p[i] for i in free] + [-1] for p in chosen]
                # a one-dimensional kernel means the chosen points are affinely independent
                kernel = integer_nullspace(rows)
                if len(kernel) != 1:
                    continue
                w = kernel[0]
                if w[-1] < 0:
                    w = tuple(-a for a in w)
                c = w[-1]
                if c <= 0 or any(a < 0 for a in w[:-1]):
                    continue
                normal = [0] * n
                for position, a in zip(free, w[:-1]):
                    normal[position] = a
                if all(_dot(normal, p) >= c for p in points):
                    facets.add(Facet(tuple(normal), c))
    return facets


def _is_vertex(point: ExponentVector, facets: Sequence[Facet], n: int) -> bool:
    tight = [list(f.normal) for f in facets if f.is_tight(point)]
    tight += [[int(i == j) for j in range(n)] for i in range(n) if point[i] == 0]
    return bool(tight) and rank(tight) == n


def _verify(points: Sequence[ExponentVector], polyhedron: NewtonPolyhedron):
    n = polyhedron.n
    for f in polyhedron.facets:
        if any(f.value(p) < f.rhs for p in points):
            raise InternalConsistencyError(f"hull verifier: point violates facet {f}")
        support = [list(v) for v in polyhedron.vertices if f.is_tight(v)]
        rays = [[int(i == j) for j in range(n)] for i in range(n) if f.normal[i] == 0]
        if not support:
            raise InternalConsistencyError(f"hull verifier: facet {f} touches no vertex")
        base = support[0]
        directions = [[a - b for a, b in zip(p, base)] for p in support[1:]] + rays
        if rank(directions) != n - 1:
            raise InternalConsistencyError(f"hull verifier: {f} is not supported by n independent points")


def newton_polyhedron(points: Iterable[Sequence[int]]) -> NewtonPolyhedron:
    """
    Convex hull of the points plus the nonnegative orthant.

    Args:
        points: exponent vectors, all of one length

    Returns:
        NewtonPolyhedron: vertices and facets, canonically sorted
    """
    points = [tuple(int(a) for a in p) for p in points]
    if not points:
        raise EmptyInputError("Newton polyhedron of an empty point set")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise DimensionMismatchError("points of different lengths")
    if any(a < 0 for p in points for a in p):
        raise NegativeCoordinateError("exponents must be non-negative")
    if n > MAX_DIMENSION:
        raise UnsupportedDimensionError(f"facet enumeration is limited to n <= {MAX_DIMENSION}")

    minimal = sorted(minimalize(points))
    facets = sorted(_candidate_facets(minimal, n))
    vertices = tuple(p for p in minimal if _is_vertex(p, facets, n))
    polyhedron = NewtonPolyhedron(n, vertices, tuple(facets))
    _verify(minimal, polyhedron)
    if not polyhedron.is_convenient:
        logger.warning("⚠️ Newton polyhedron is not convenient (some axis has no pure power)")
    return polyhedron


def polyhedron_of_ideal(ideal: IdealPresentation) -> NewtonPolyhedron:
    """Gamma_+ of the union of the generator supports."""
    return newton_polyhedron(ideal.supports())


def polyhedron_of_monomial_ideal(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return newton_polyhedron(ideal.generators)


def member(polyhedron: NewtonPolyhedron, point: Sequence) -> bool:
    """True iff the rational point satisfies every facet inequality."""
    point = [Fraction(a) for a in point]
    if len(point) != polyhedron.n:
        raise DimensionMismatchError(f"point has length {len(point)}, polyhedron n={polyhedron.n}")
    if any(a < 0 for a in point):
        raise NegativeCoordinateError("membership is defined on the nonnegative orthant")
    return all(f.value(point) >= f.rhs for f in polyhedron.facets)


def _pulling_triangulation(points: List[Tuple[int, ...]], dim: int, hyperplanes: Sequence[Facet]):
    """Simplices (as point tuples) of a pulling triangulation of conv(points)."""
    if dim == 0:
        return [(points[0],)]
    apex = min(points)
    simplices = []
    seen = set()
    for h in hyperplanes:
        face = [p for p in points if h.is_tight(p)]
        if apex in face or len(face) < dim:
            continue
        key = frozenset(face)
        if key in seen or affine_rank(face) != dim - 1:
            continue
        seen.add(key)
        for simplex in _pulling_triangulation(sorted(face), dim - 1, hyperplanes):
            simplices.append((apex,) + simplex)
    return simplices


def covolume(polyhedron: NewtonPolyhedron) -> Fraction:
    """
    Volume of the orthant minus Gamma_+.

    Each compact facet is triangulated and every simplex is coned to the
    origin, contributing |det| / n!.
    """
    if not polyhedron.is_convenient:
        raise InfiniteColengthError("complement of a non-convenient polyhedron is unbounded")
    n = polyhedron.n
    if not polyhedron.facets:
        return Fraction(0)
    coordinate_planes = [Facet(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    hyperplanes = list(polyhedron.facets) + coordinate_planes
    total = Fraction(0)
    for facet in polyhedron.compact_facets:
        face = sorted(v for v in polyhedron.vertices if facet.is_tight(v))
        for simplex in _pulling_triangulation(face, n - 1, hyperplanes):
            total += abs(determinant([list(p) for p in simplex]))
    return total / factorial(n)


def minkowski_product(first: NewtonPolyhedron, second: NewtonPolyhedron) -> NewtonPolyhedron:
    """Gamma_+ of a product ideal: hull of pairwise vertex sums."""
    if first.n != second.n:
        raise DimensionMismatchError(f"ambient dimensions differ: {first.n} vs {second.n}")
    sums = {tuple(a + b for a, b in zip(p, q)) for p in first.vertices for q in second.vertices}
    return newton_polyhedron(sums)


def simplex_polyhedron(n: int, k: int = 1) -> NewtonPolyhedron:
    """Gamma_+(m^k)."""
    return newton_polyhedron([tuple(k if i == j else 0 for j in range(n)) for i in range(n)])


def term_ideal(polyhedron: NewtonPolyhedron) -> MonomialIdeal:
    """
    Monomial ideal of all lattice points of Gamma_+ (the integral closure
    of a monomial ideal).

    For every choice of the first n-1 coordinates inside the axis box the
    smallest admissible last coordinate is computed from the facets.
    """
    if not polyhedron.is_convenient:
        raise InfiniteColengthError("term ideal search needs finite colength")
    n = polyhedron.n
    intercepts = polyhedron.axis_intercepts()
    if n == 1:
        return MonomialIdeal(((intercepts[0],),), 1)
    candidates = []

    def walk(prefix: List[int]):
        if len(prefix) == n - 1:
            last = 0
            for f in polyhedron.facets:
                remaining = f.rhs - _dot(f.normal[:-1], prefix)
                if remaining > 0:
                    last = max(last, ceil(Fraction(remaining, f.normal[-1])))
            candidates.append(tuple(prefix) + (min(last, intercepts[-1]),))
            return
        for value in range(intercepts[len(prefix)] + 1):
            walk(prefix + [value])

    walk([])
    return MonomialIdeal(tuple(candidates), n)


def polyhedra_equal(first: NewtonPolyhedron, second: NewtonPolyhedron) -> bool:
    if first.n != second.n:
        raise DimensionMismatchError(f"ambient dimensions differ: {first.n} vs {second.n}")
    return sorted(first.vertices) == sorted(second.vertices)


def diagonal_witness(polyhedron: NewtonPolyhedron) -> Optional[Tuple[int, ...]]:
    """(a_1..a_n) when Gamma_+ equals that of <x_1^{a_1}, ..., x_n^{a_n}>, else None."""
    if not polyhedron.is_convenient:
        return None
    if any(sum(1 for a in v if a) != 1 for v in polyhedron.vertices):
        return None
    if len(polyhedron.compact_facets) != 1:
        return None
    return polyhedron.axis_intercepts()
