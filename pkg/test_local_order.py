"""
Negative lexicographical order and variable restriction
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import DimensionMismatchError, ZeroPolynomialError
from core.ideal_parser import parse_ideal
from core.local_order import VariableSubset, initial_monomial, neglex_greater, project, restrict
from core.polynomial import Polynomial

exponents = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))


def poly(text: str) -> Polynomial:
    return parse_ideal(f"vars: x, y\ngens: {text}\n").generators[0]


@pytest.mark.parametrize(
    "a, b",
    [((0, 1), (1, 0)), ((0, 2), (1, 0)), ((0, 0), (3, 1)), ((0, 0), (0, 1))],
)
def test_neglex_greater_examples(a, b):
    assert neglex_greater(a, b)
    assert not neglex_greater(b, a)


def test_neglex_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        neglex_greater((0, 1), (0, 1, 0))


@given(exponents, exponents)
def test_neglex_is_total(a, b):
    assert (a == b) or (neglex_greater(a, b) != neglex_greater(b, a))


@given(exponents, exponents, exponents)
def test_neglex_is_multiplicative(a, b, gamma):
    shifted_a = tuple(x + g for x, g in zip(a, gamma))
    shifted_b = tuple(x + g for x, g in zip(b, gamma))
    assert neglex_greater(a, b) == neglex_greater(shifted_a, shifted_b)


@given(exponents)
def test_one_is_greatest(a):
    if any(a):
        assert neglex_greater((0, 0, 0), a)


@pytest.mark.parametrize(
    "text, expected",
    [("x + y^2", (0, 2)), ("y^3", (0, 3)), ("x^2 + x*y^2", (1, 2))],
)
def test_initial_monomial(text, expected):
    assert initial_monomial(poly(text)) == expected


def test_initial_monomial_of_zero():
    with pytest.raises(ZeroPolynomialError):
        initial_monomial(Polynomial.zero(2))


def test_restrict_examples():
    f = poly("x + y^2")
    assert restrict(f, VariableSubset(frozenset({2}), 2)) == poly("y^2")
    assert restrict(f, VariableSubset(frozenset({1}), 2)) == poly("x")
    assert restrict(poly("x*y"), VariableSubset(frozenset({1}), 2)).is_zero()


def test_project_drops_excluded_coordinates():
    f = poly("x + y^2 + 3*y^5")
    projected = project(f, VariableSubset.suffix(2, 2))
    assert projected == Polynomial.from_terms(1, {(2,): 1, (5,): 3})


def test_variable_subset_validation():
    with pytest.raises(ValueError):
        VariableSubset(frozenset(), 2)
    with pytest.raises(ValueError):
        VariableSubset(frozenset({3}), 2)
    assert VariableSubset.suffix(2, 3).is_suffix()
    assert not VariableSubset(frozenset({1, 3}), 3).is_suffix()


@given(st.lists(st.tuples(exponents, st.integers(1, 4)), min_size=1, max_size=5), st.integers(1, 3))
def test_initial_monomial_of_suffix_restriction(terms, j):
    # the neglex-initial monomial of f lies in the suffix variables whenever f_L is nonzero
    f = Polynomial.from_terms(3, dict(terms))
    subset = VariableSubset.suffix(j, 3)
    restricted = restrict(f, subset)
    if not restricted.is_zero():
        assert initial_monomial(f) == initial_monomial(restricted)
