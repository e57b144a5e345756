"""
Exact linear algebra over the rationals
Thin layer over sympy's DomainMatrix so callers speak Fraction and int
"""
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Number = Union[int, Fraction]


def to_qq(value: Number):
    """Convert an int or Fraction into a QQ element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """Convert a QQ/ZZ domain element into a Fraction."""
    if hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def _rational_matrix(rows: Sequence[Sequence[Number]], width: int = None) -> DomainMatrix:
    rows = [list(row) for row in rows]
    ncols = width if width is not None else (len(rows[0]) if rows else 0)
    data = [[to_qq(entry) for entry in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a rational matrix given as a list of rows."""
    rows = [row for row in rows]
    if not rows or not len(rows[0]):
        return 0
    return _rational_matrix(rows).rank()


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([[p - b for p, b in zip(point, base)] for point in points[1:]])


def determinant(rows: Sequence[Sequence[Number]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return to_fraction(_rational_matrix(rows).det())


def integer_nullspace(rows: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """
    Basis of the integer kernel of an integer matrix.

    Each basis vector is primitive (gcd of entries is 1).
    """
    width = len(rows[0])
    matrix = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (len(rows), width), ZZ)
    basis = []
    for vector in matrix.nullspace().to_list():
        entries = [int(v) for v in vector]
        divisor = 0
        for v in entries:
            divisor = gcd(divisor, abs(v))
        if divisor:
            basis.append(tuple(v // divisor for v in entries))
    return basis


def solve(rows: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> List[Fraction]:
    """Solve a square nonsingular system exactly."""
    matrix = _rational_matrix(rows)
    column = DomainMatrix([[to_qq(v)] for v in rhs], (len(rhs), 1), QQ)
    solution = matrix.lu_solve(column)
    return [to_fraction(row[0]) for row in solution.to_list()]
