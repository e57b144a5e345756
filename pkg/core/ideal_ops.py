"""
Ideal Operations - powers, linear coordinate changes, Jacobian ideals, generic combinations
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from core.errors import ConstantPolynomialError, DimensionMismatchError, PowerCapExceeded, SingularChangeError
from core.ideal import IdealPresentation
from core.linalg import determinant
from core.monomial_ideal import MonomialIdeal
from core.polynomial import Polynomial, product, render_rational

logger = logging.getLogger(__name__)

DEFAULT_POWER_CAP = 8
DEFAULT_COEFFICIENT_BOUND = 101


def nonzero_coefficient(rng: random.Random, bound: int) -> int:
    """Uniform draw from [-bound, bound] without 0."""
    return rng.choice((-1, 1)) * rng.randint(1, bound)


@dataclass(frozen=True)
class LinearChange:
    """
    Invertible linear substitution phi.

    Row i of the matrix gives the image of variable i:
    x_i -> sum_j matrix[i][j] * x_j.
    """

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatchError("linear change needs a square matrix")
        if determinant(rows) == 0:
            raise SingularChangeError("linear change has zero determinant")
        object.__setattr__(self, "matrix", rows)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = DEFAULT_COEFFICIENT_BOUND) -> "LinearChange":
        """Uniform integer entries in [-bound, bound], redrawn until invertible."""
        while True:
            rows = tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(n))
            if determinant(rows) != 0:
                return cls(rows)

    @classmethod
    def parse(cls, text: str) -> "LinearChange":
        """Rows separated by ';', entries by ',' e.g. "1,-1;0,1"."""
        try:
            rows = [tuple(Fraction(v.strip()) for v in row.split(",")) for row in text.split(";")]
        except (ValueError, ZeroDivisionError) as e:
            raise SingularChangeError(f"malformed matrix {text!r}: {e}")
        return cls(tuple(rows))

    def forms(self) -> List[Polynomial]:
        return [Polynomial.linear_form(row) for row in self.matrix]

    def render(self) -> str:
        return ";".join(",".join(render_rational(v) for v in row) for row in self.matrix)

    def is_identity(self) -> bool:
        return self == LinearChange.identity(self.n)


def ideal_power(ideal: IdealPresentation, t: int, cap: int = DEFAULT_POWER_CAP) -> IdealPresentation:
    """All t-fold products of the generators (antichain for monomial input)."""
    if t < 1:
        raise ValueError("power must be at least 1")
    if t > cap:
        raise PowerCapExceeded(f"power {t} exceeds the configured cap {cap}")
    if ideal.is_monomial:
        powered = MonomialIdeal(ideal.monomial_exponents(), ideal.n).power(t)
        return IdealPresentation.from_monomials(powered.generators, ideal.variables)
    generators = []
    seen = set()
    for combo in combinations_with_replacement(ideal.generators, t):
        p = product(combo, ideal.n)
        if p not in seen:
            seen.add(p)
            generators.append(p)
    return ideal.with_generators(generators)


def apply_linear_change(ideal: IdealPresentation, change: LinearChange) -> IdealPresentation:
    """phi*(I): generators composed with the substitution, expanded."""
    if change.n != ideal.n:
        raise DimensionMismatchError(f"change acts on {change.n} variables, ideal has {ideal.n}")
    forms = change.forms()
    return ideal.with_generators(g.substitute(forms) for g in ideal.generators)


def jacobian_ideal(f: Polynomial, variables: Optional[Sequence[str]] = None) -> IdealPresentation:
    """The nonzero partial derivatives of f."""
    partials = [f.derivative(i) for i in range(f.n)]
    partials = [p for p in partials if not p.is_zero()]
    if not partials:
        raise ConstantPolynomialError("all partial derivatives vanish (f is constant)")
    return IdealPresentation(tuple(partials), tuple(variables or ()))


def generic_combinations(
    ideal: IdealPresentation,
    count: int,
    seed: int,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    coefficients: Optional[Sequence[Sequence[int]]] = None,
) -> IdealPresentation:
    """
    Random combinations of the generators, deterministic per seed.

    Args:
        ideal: source presentation
        count: number of combinations
        seed: seed of the coefficient draw
        bound: coefficients are uniform nonzero integers in [-bound, bound]
        coefficients: explicit count x r coefficient matrix (skips the draw)

    Returns:
        IdealPresentation: the combinations; a row that happens to give
        the zero polynomial is redrawn
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    r = len(ideal.generators)
    rows = [list(row) for row in coefficients] if coefficients is not None else None
    combos = []
    for index in range(count):
        row = rows[index] if rows is not None else None
        while True:
            if row is None:
                row = [nonzero_coefficient(rng, bound) for _ in range(r)]
            combination = Polynomial.zero(ideal.n)
            for c, g in zip(row, ideal.generators):
                if c:
                    combination = combination + g.scale(c)
            if not combination.is_zero():
                break
            if rows is not None:
                raise ValueError(f"coefficient row {index} gives the zero polynomial")
            row = None
        combos.append(combination)
    return ideal.with_generators(combos)
