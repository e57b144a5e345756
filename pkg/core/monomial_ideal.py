"""
Monomial Ideal - antichains of exponent vectors
Fast path for initial ideals, term ideals and all polyhedral computations
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_divides, monomial_mul

from core.errors import DimensionMismatchError, EmptyRestrictionError, InfiniteColengthError
from core.ideal import IdealPresentation
from core.local_order import VariableSubset, neglex_key
from core.polynomial import ExponentVector, check_exponent


def minimalize(exponents: Iterable[Sequence[int]]) -> Tuple[ExponentVector, ...]:
    """Divisibility-minimal elements, sorted neglex-descending."""
    unique = sorted({tuple(e) for e in exponents}, key=sum)
    minimal: List[ExponentVector] = []
    for e in unique:
        if not any(monomial_divides(m, e) for m in minimal):
            minimal.append(e)
    return tuple(sorted(minimal, key=neglex_key, reverse=True))


def exponents_of_degree(n: int, degree: int) -> Iterator[ExponentVector]:
    """All exponent vectors in n variables of the given total degree."""
    for combo in combinations_with_replacement(range(n), degree):
        exponent = [0] * n
        for i in combo:
            exponent[i] += 1
        yield tuple(exponent)


@lru_cache(maxsize=4096)
def _count_standard(generators: Tuple[ExponentVector, ...], n: int) -> int:
    """
    Number of exponents outside the ideal, sliced along the first coordinate.

    Assumes every axis carries a pure power.
    """
    if any(not any(g) for g in generators):
        return 0
    if n == 1:
        return min(g[0] for g in generators)
    bound = min(g[0] for g in generators if not any(g[1:]))
    total = 0
    for value in range(bound):
        sliced = minimalize(g[1:] for g in generators if g[0] <= value)
        total += _count_standard(sliced, n - 1)
    return total


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators."""

    generators: Tuple[ExponentVector, ...]
    n: int

    def __post_init__(self):
        if not self.generators:
            raise ValueError("monomial ideal needs at least one generator")
        checked = [check_exponent(g, self.n) for g in self.generators]
        object.__setattr__(self, "generators", minimalize(checked))

    # ----- construction -------------------------------------------------

    @classmethod
    def from_exponents(cls, exponents: Iterable[Sequence[int]], n: Optional[int] = None) -> "MonomialIdeal":
        exponents = [tuple(e) for e in exponents]
        if n is None:
            if not exponents:
                raise ValueError("cannot infer dimension from no generators")
            n = len(exponents[0])
        return cls(tuple(exponents), n)

    @classmethod
    def maximal_ideal_power(cls, n: int, k: int) -> "MonomialIdeal":
        """m^k; k = 0 gives the unit ideal."""
        return cls(tuple(exponents_of_degree(n, k)), n)

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> "MonomialIdeal":
        """<x_1^{a_1}, ..., x_n^{a_n}>"""
        n = len(exponents)
        return cls(tuple(tuple(a if i == j else 0 for j in range(n)) for i, a in enumerate(exponents)), n)

    # ----- queries ------------------------------------------------------

    @property
    def minimal_generators(self) -> Tuple[ExponentVector, ...]:
        return self.generators

    def contains(self, exponent: Sequence[int]) -> bool:
        exponent = tuple(exponent)
        return any(monomial_divides(g, exponent) for g in self.generators)

    def pure_power_exponents(self) -> Tuple[Optional[int], ...]:
        """Smallest a with x_i^a in the ideal, per axis (None when absent)."""
        bounds: List[Optional[int]] = [None] * self.n
        for g in self.generators:
            nonzero = [i for i, a in enumerate(g) if a]
            if len(nonzero) == 1:
                i = nonzero[0]
                if bounds[i] is None or g[i] < bounds[i]:
                    bounds[i] = g[i]
            elif not nonzero:
                return (0,) * self.n
        return tuple(bounds)

    @property
    def is_finite_colength(self) -> bool:
        return all(b is not None for b in self.pure_power_exponents())

    def order(self) -> int:
        return min(sum(g) for g in self.generators)

    def standard_monomials(self) -> List[ExponentVector]:
        """Exponents outside the ideal, by box enumeration."""
        bounds = self.pure_power_exponents()
        if any(b is None for b in bounds):
            raise InfiniteColengthError("staircase is unbounded: some axis has no pure power")
        return [e for e in product(*(range(b) for b in bounds)) if not self.contains(e)]

    def colength(self) -> int:
        if not self.is_finite_colength:
            raise InfiniteColengthError("staircase is unbounded: some axis has no pure power")
        return _count_standard(self.generators, self.n)

    def highest_corner(self) -> Optional[int]:
        """
        Least D with every monomial of degree D in the ideal.

        None when some axis has no pure power.
        """
        bounds = self.pure_power_exponents()
        if any(b is None for b in bounds):
            return None
        if self.order() == 0:
            return 0
        top = sum(b - 1 for b in bounds) + 1
        for degree in range(self.order(), top):
            if all(self.contains(e) for e in exponents_of_degree(self.n, degree)):
                return degree
        return top

    # ----- algebra ------------------------------------------------------

    def _check(self, other: "MonomialIdeal"):
        if other.n != self.n:
            raise DimensionMismatchError(f"ambient dimensions differ: {self.n} vs {other.n}")

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            tuple(monomial_mul(a, b) for a in self.generators for b in other.generators), self.n
        )

    __mul__ = multiply

    def power(self, t: int) -> "MonomialIdeal":
        if t < 0:
            raise ValueError("power must be non-negative")
        result = MonomialIdeal(((0,) * self.n,), self.n)
        for _ in range(t):
            result = result.multiply(self)
        return result

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is contained in self."""
        self._check(other)
        return all(self.contains(g) for g in other.generators)

    def restrict_to(self, subset: VariableSubset) -> "MonomialIdeal":
        """
        Generators supported on L, written in the |L| variables of L.

        Raises EmptyRestrictionError when no generator is supported on L
        (the restriction is the zero ideal).
        """
        kept = [subset.project(g) for g in self.generators if subset.supports(g)]
        if not kept:
            raise EmptyRestrictionError("no generator is supported on the subset")
        return MonomialIdeal(tuple(kept), len(subset.indices))

    def to_presentation(self, variables: Optional[Sequence[str]] = None) -> IdealPresentation:
        return IdealPresentation.from_monomials(self.generators, variables)
