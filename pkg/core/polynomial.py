"""
Polynomial - exact multivariate polynomials over the rationals
Backed by sympy sparse polynomial rings ordered by neglex (sympy's ilex)
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import igrlex, ilex
from sympy.polys.rings import PolyElement, PolyRing

from core.errors import DimensionMismatchError, ZeroPolynomialError
from core.linalg import to_fraction, to_qq

# Exponent vectors are plain int tuples; length is the ambient dimension.
ExponentVector = Tuple[int, ...]
Coefficient = Union[int, Fraction]

# sympy's ilex key is tuple(-a_i): x^a > x^b iff at the first differing index a_i < b_i.
NEGLEX = ilex


def render_rational(value: Coefficient) -> str:
    """Render a rational as "p/q" in lowest terms ("p" when integral)."""
    return str(Fraction(value))


def check_exponent(exponent: Sequence[int], n: int) -> ExponentVector:
    """Validate an exponent vector against the ambient dimension."""
    exponent = tuple(int(a) for a in exponent)
    if len(exponent) != n:
        raise DimensionMismatchError(f"exponent {exponent} does not have length {n}")
    if any(a < 0 for a in exponent):
        raise ValueError(f"exponent {exponent} has a negative entry")
    return exponent


@lru_cache(maxsize=None)
def polynomial_ring(n: int) -> PolyRing:
    """The ring QQ[x1..xn] with neglex as its monomial order."""
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    names = ",".join(f"x{i + 1}" for i in range(n))
    return PolyRing(names, QQ, NEGLEX)


@lru_cache(maxsize=None)
def local_degree_ring(n: int) -> PolyRing:
    """QQ[x1..xn] under a local degree order: lower total degree ranks higher."""
    names = ",".join(f"x{i + 1}" for i in range(n))
    return PolyRing(names, QQ, igrlex)


def default_names(n: int) -> Tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


class Polynomial:
    """Immutable polynomial in n variables with exact rational coefficients."""

    __slots__ = ("_element", "n")

    def __init__(self, element: PolyElement):
        self._element = element
        self.n = element.ring.ngens

    # ----- construction -------------------------------------------------

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[Sequence[int], Coefficient]) -> "Polynomial":
        ring = polynomial_ring(n)
        data = {}
        for exponent, coeff in terms.items():
            exponent = check_exponent(exponent, n)
            coeff = Fraction(coeff)
            if coeff:
                data[exponent] = data.get(exponent, Fraction(0)) + coeff
        return cls(ring.from_dict({e: to_qq(c) for e, c in data.items() if c}))

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(polynomial_ring(n).zero)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(polynomial_ring(n).one)

    @classmethod
    def constant(cls, n: int, value: Coefficient) -> "Polynomial":
        return cls.from_terms(n, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, index: int) -> "Polynomial":
        """The coordinate x_{index+1} (0-based index)."""
        return cls(polynomial_ring(n).gens[index])

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Coefficient = 1) -> "Polynomial":
        exponent = tuple(exponent)
        return cls.from_terms(len(exponent), {exponent: coeff})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Coefficient]) -> "Polynomial":
        n = len(coefficients)
        return cls.from_terms(
            n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coefficients)}
        )

    # ----- access -------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        return self._element

    @property
    def ring(self) -> PolyRing:
        return self._element.ring

    def is_zero(self) -> bool:
        return not self._element

    def __bool__(self) -> bool:
        return bool(self._element)

    def __len__(self) -> int:
        return len(self._element)

    def terms(self) -> List[Tuple[ExponentVector, Fraction]]:
        """Terms in canonical neglex-descending order."""
        return [(tuple(e), to_fraction(c)) for e, c in self._element.terms()]

    def support(self) -> FrozenSet[ExponentVector]:
        if self.is_zero():
            raise ZeroPolynomialError("support of the zero polynomial")
        return frozenset(self._element.keys())

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return to_fraction(self._element.get(tuple(exponent), QQ.zero))

    def leading_term(self) -> Tuple[ExponentVector, Fraction]:
        """Neglex-leading exponent and coefficient."""
        if self.is_zero():
            raise ZeroPolynomialError("leading term of the zero polynomial")
        exponent, coeff = self._element.LT
        return tuple(exponent), to_fraction(coeff)

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(e) for e in self._element.keys())

    def order(self) -> int:
        """Lowest total degree of a term."""
        if self.is_zero():
            raise ZeroPolynomialError("order of the zero polynomial")
        return min(sum(e) for e in self._element.keys())

    def is_monomial(self) -> bool:
        return len(self._element) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._element.keys())

    # ----- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise DimensionMismatchError(f"ambient dimensions differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element - other._element)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(other._element - self._element)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element * other._element)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(-self._element)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        return Polynomial(self._element ** exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and dict(self._element) == dict(other._element)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._element.items())))

    def scale(self, factor: Coefficient) -> "Polynomial":
        return Polynomial(self._element.mul_ground(to_qq(factor)))

    def monic(self) -> "Polynomial":
        """Divide by the neglex-leading coefficient."""
        if self.is_zero():
            return self
        return Polynomial(self._element.monic())

    def shift(self, exponent: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial x^exponent."""
        return Polynomial(self._element.mul_monom(tuple(exponent)))

    def derivative(self, index: int) -> "Polynomial":
        """Partial derivative in the variable x_{index+1}."""
        return Polynomial(self._element.diff(self.ring.gens[index]))

    def filter_terms(self, keep) -> "Polynomial":
        """Keep the terms whose exponent satisfies the predicate."""
        return Polynomial(self._element.new([(e, c) for e, c in self._element.items() if keep(e)]))

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every term of total degree >= degree."""
        return self.filter_terms(lambda e: sum(e) < degree)

    def substitute(self, forms: Sequence["Polynomial"]) -> "Polynomial":
        """
        Compose with x_i -> forms[i].

        The forms all live in one target ring, which may have a different
        number of variables than this polynomial's ring.

        Args:
            forms: one polynomial per variable of this ring

        Returns:
            Polynomial: the composition, fully expanded in the target ring
        """
        if len(forms) != self.n:
            raise DimensionMismatchError(f"need {self.n} substitution forms, got {len(forms)}")
        target = forms[0].ring
        result = target.zero
        powers: Dict[Tuple[int, int], PolyElement] = {}
        for exponent, coeff in self._element.items():
            term = target.ground_new(coeff)
            for i, a in enumerate(exponent):
                if not a:
                    continue
                key = (i, a)
                if key not in powers:
                    powers[key] = forms[i]._element ** a
                term = term * powers[key]
            result = result + term
        return Polynomial(result)

    # ----- rendering ----------------------------------------------------

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        """Human/parser readable form, terms in neglex-descending order."""
        names = tuple(names) if names is not None else default_names(self.n)
        if self.is_zero():
            return "0"
        pieces = []
        for exponent, coeff in self.terms():
            factors = []
            for name, a in zip(names, exponent):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            magnitude = abs(coeff)
            if not factors:
                body = render_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([render_rational(magnitude)] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r}, n={self.n})"


def support(f: Polynomial) -> FrozenSet[ExponentVector]:
    """Exponents carrying a nonzero coefficient."""
    return f.support()


def product(polynomials: Iterable[Polynomial], n: int) -> Polynomial:
    result = Polynomial.one(n)
    for p in polynomials:
        result = result * p
    return result
