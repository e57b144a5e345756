"""
Local Order - negative lexicographical ordering and variable restriction
1 is the greatest monomial and x_n > x_{n-1} > ... > x_1
"""
from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from core.errors import DimensionMismatchError, ZeroPolynomialError
from core.polynomial import NEGLEX, ExponentVector, Polynomial


def neglex_key(exponent: Sequence[int]) -> Tuple[int, ...]:
    """Sort key: larger key means larger in neglex."""
    return NEGLEX(tuple(exponent))


def neglex_greater(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff x^a > x^b, i.e. a_i < b_i at the first index where they differ."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare {tuple(a)} and {tuple(b)}")
    return neglex_key(a) > neglex_key(b)


def initial_monomial(f: Polynomial) -> ExponentVector:
    """Neglex-maximum of the support of f."""
    if f.is_zero():
        raise ZeroPolynomialError("initial monomial of the zero polynomial")
    return f.leading_term()[0]


@dataclass(frozen=True)
class VariableSubset:
    """
    A nonempty set L of variable indices, 1-based as in {1, ..., n}.
    """

    included: FrozenSet[int]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "included", frozenset(int(i) for i in self.included))
        if not self.included:
            raise ValueError("variable subset must be nonempty")
        bad = [i for i in self.included if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"variable indices {sorted(bad)} out of range 1..{self.n}")

    @classmethod
    def suffix(cls, j: int, n: int) -> "VariableSubset":
        """The subset {j, ..., n}."""
        return cls(frozenset(range(j, n + 1)), n)

    @property
    def indices(self) -> Tuple[int, ...]:
        """0-based positions of the included variables, ascending."""
        return tuple(sorted(i - 1 for i in self.included))

    def is_suffix(self) -> bool:
        return self.included == frozenset(range(min(self.included), self.n + 1))

    def supports(self, exponent: Sequence[int]) -> bool:
        """True iff the exponent vanishes outside L."""
        return all(a == 0 or (i + 1) in self.included for i, a in enumerate(exponent))

    def project(self, exponent: Sequence[int]) -> ExponentVector:
        return tuple(exponent[i] for i in self.indices)

    def embed(self, exponent: Sequence[int]) -> ExponentVector:
        full = [0] * self.n
        for position, a in zip(self.indices, exponent):
            full[position] = a
        return tuple(full)


def restrict(f: Polynomial, subset: VariableSubset) -> Polynomial:
    """The terms of f supported on the coordinates in L (may be zero)."""
    if subset.n != f.n:
        raise DimensionMismatchError(f"subset lives in {subset.n} variables, polynomial in {f.n}")
    return f.filter_terms(subset.supports)


def project(f: Polynomial, subset: VariableSubset) -> Polynomial:
    """restrict(f, L) rewritten as a polynomial in the |L| variables of L."""
    kept = restrict(f, subset)
    return Polynomial.from_terms(
        len(subset.indices), {subset.project(e): c for e, c in kept.terms()}
    )
