"""
Newton polyhedra: facets, membership, covolume, Minkowski sums, term ideals
"""
from fractions import Fraction

import pytest

from core.errors import (
    DimensionMismatchError,
    EmptyInputError,
    EmptyRestrictionError,
    InfiniteColengthError,
    NegativeCoordinateError,
    UnsupportedDimensionError,
)
from core.local_order import VariableSubset
from core.monomial_ideal import MonomialIdeal
from invariants.newton import (
    Facet,
    covolume,
    diagonal_witness,
    member,
    minkowski_product,
    newton_polyhedron,
    polyhedra_equal,
    polyhedron_of_ideal,
    polyhedron_of_monomial_ideal,
    simplex_polyhedron,
    term_ideal,
)

DIAGONAL = [(2, 0), (0, 4)]
STAIRCASE = [(2, 0), (1, 1), (0, 3)]


def test_segment_point_is_not_a_vertex():
    polyhedron = newton_polyhedron([(2, 0), (0, 4), (1, 2)])
    assert set(polyhedron.vertices) == {(2, 0), (0, 4)}
    assert polyhedron.compact_facets == (Facet((2, 1), 4),)


def test_maximal_ideal_has_one_facet():
    polyhedron = simplex_polyhedron(3)
    assert polyhedron.facets == (Facet((1, 1, 1), 1),)


def test_staircase_has_two_facets():
    polyhedron = newton_polyhedron(STAIRCASE)
    assert set(polyhedron.vertices) == set(STAIRCASE)
    assert set(polyhedron.compact_facets) == {Facet((1, 1), 2), Facet((2, 1), 3)}


def test_every_point_satisfies_every_facet():
    points = [(3, 0, 0), (0, 2, 1), (1, 1, 1), (0, 0, 4), (0, 5, 0)]
    polyhedron = newton_polyhedron(points)
    for facet in polyhedron.facets:
        assert all(facet.value(p) >= facet.rhs for p in points)


def test_construction_errors():
    with pytest.raises(EmptyInputError):
        newton_polyhedron([])
    with pytest.raises(DimensionMismatchError):
        newton_polyhedron([(1, 0), (1,)])
    with pytest.raises(NegativeCoordinateError):
        newton_polyhedron([(-1, 2)])


def test_one_dimensional_ray():
    polyhedron = newton_polyhedron([(3,), (5,)])
    assert polyhedron.vertices == ((3,),)
    assert covolume(polyhedron) == 3


@pytest.mark.parametrize(
    "point, inside",
    [
        ((Fraction(4, 3), Fraction(4, 3)), True),
        ((1, 1), False),
        ((2, 0), True),
        ((0, 4), True),
    ],
)
def test_member(point, inside):
    assert member(newton_polyhedron(DIAGONAL), point) is inside


def test_member_rejects_negative_coordinates():
    with pytest.raises(NegativeCoordinateError):
        member(newton_polyhedron(DIAGONAL), (-1, 5))


def test_covolume_examples():
    assert covolume(newton_polyhedron(DIAGONAL)) == 4
    assert covolume(newton_polyhedron(STAIRCASE)) == Fraction(5, 2)
    assert covolume(simplex_polyhedron(3, 2)) == Fraction(8, 6)


def test_covolume_of_non_convenient_polyhedron():
    with pytest.raises(InfiniteColengthError):
        covolume(newton_polyhedron([(1, 1)]))


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_covolume_scales_with_powers(t):
    base = MonomialIdeal(tuple(STAIRCASE), 2)
    powered = polyhedron_of_monomial_ideal(base.power(t))
    assert covolume(powered) == t ** 2 * Fraction(5, 2)


def test_minkowski_product_example():
    product = minkowski_product(newton_polyhedron(DIAGONAL), simplex_polyhedron(2))
    assert set(product.vertices) == {(3, 0), (2, 1), (0, 5)}
    assert covolume(product) == Fraction(13, 2)


def test_minkowski_identity():
    polyhedron = newton_polyhedron(STAIRCASE)
    assert polyhedra_equal(minkowski_product(polyhedron, newton_polyhedron([(0, 0)])), polyhedron)


def test_minkowski_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        minkowski_product(simplex_polyhedron(2), simplex_polyhedron(3))


def test_term_ideal_examples():
    assert set(term_ideal(newton_polyhedron(DIAGONAL)).generators) == {(2, 0), (1, 2), (0, 4)}
    assert set(term_ideal(simplex_polyhedron(2, 2)).generators) == {(2, 0), (1, 1), (0, 2)}
    assert set(term_ideal(newton_polyhedron(STAIRCASE)).generators) == set(STAIRCASE)


def test_term_ideal_has_the_same_polyhedron():
    polyhedron = newton_polyhedron([(4, 0, 0), (0, 3, 0), (0, 0, 2), (1, 1, 1)])
    closure = term_ideal(polyhedron)
    assert polyhedra_equal(polyhedron_of_monomial_ideal(closure), polyhedron)


def test_polyhedra_equal():
    assert polyhedra_equal(newton_polyhedron([(2, 0), (0, 4), (1, 2)]), newton_polyhedron(DIAGONAL))
    assert not polyhedra_equal(simplex_polyhedron(2), simplex_polyhedron(2, 2))


def test_polyhedron_of_ideal_uses_supports(contraex_j, contraex_i):
    assert polyhedra_equal(polyhedron_of_ideal(contraex_j), newton_polyhedron(DIAGONAL))
    assert polyhedra_equal(polyhedron_of_ideal(contraex_i), simplex_polyhedron(2, 2))


def test_diagonal_witness():
    assert diagonal_witness(newton_polyhedron(DIAGONAL)) == (2, 4)
    assert diagonal_witness(simplex_polyhedron(3, 2)) == (2, 2, 2)
    assert diagonal_witness(newton_polyhedron(STAIRCASE)) is None
    assert diagonal_witness(newton_polyhedron([(1, 1)])) is None


def test_dimension_limit_is_a_mathematical_error():
    points = [tuple(2 if i == j else 0 for j in range(7)) for i in range(7)]
    with pytest.raises(UnsupportedDimensionError) as info:
        newton_polyhedron(points)
    assert info.value.exit_code == 2


def test_restriction_to_a_subset_without_generators():
    ideal = MonomialIdeal.from_exponents([(2, 0, 0), (1, 1, 0), (0, 1, 1)])
    assert ideal.restrict_to(VariableSubset(frozenset({1, 2}), 3)).generators == ((1, 1), (2, 0))
    with pytest.raises(EmptyRestrictionError) as info:
        ideal.restrict_to(VariableSubset(frozenset({3}), 3))
    assert info.value.exit_code == 2
