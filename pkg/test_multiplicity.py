"""
Mixed multiplicities by Bhattacharya interpolation and by generic sections
"""
import random

import pytest

from core.errors import InfiniteColengthError, NonIsolatedSingularityError
from core.ideal import IdealPresentation
from core.monomial_ideal import MonomialIdeal
from invariants.multiplicity import (
    GENERIC,
    POLYHEDRAL,
    MixedMultiplicityVector,
    bhattacharya_prediction,
    bhattacharya_value,
    milnor_vector,
    mixed_multiplicities,
    mixed_multiplicities_generic,
    _random_embedding,
    mixed_multiplicities_polyhedral,
    ord_,
    samuel_multiplicity,
)
from invariants.newton import newton_polyhedron


def monomial(*exponents) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(exponents)


@pytest.mark.parametrize(
    "ideal, expected",
    [
        (monomial((2, 0), (0, 4)), (2, 8)),
        (monomial((0, 2), (1, 1), (2, 0)), (2, 4)),
        (monomial((2, 0), (1, 1), (0, 3)), (2, 5)),
        (monomial((1, 0), (0, 1)), (1, 1)),
    ],
)
def test_polyhedral_examples(ideal, expected):
    e = mixed_multiplicities_polyhedral(ideal)
    assert e.values == expected
    assert e.method == POLYHEDRAL


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", range(1, 6))
def test_powers_of_maximal_ideal(n, k):
    e = mixed_multiplicities_polyhedral(MonomialIdeal.maximal_ideal_power(n, k))
    assert e.values == tuple(k ** j for j in range(1, n + 1))


def seeded_triple(seed: int):
    rng = random.Random(seed)
    return tuple(rng.randint(1, 9) for _ in range(3))


@pytest.mark.parametrize(
    "exponents", [(1, 2, 3), (3, 2, 2), (4, 1, 2)] + [seeded_triple(seed) for seed in range(10)]
)
def test_diagonal_ideals_multiply_smallest_exponents(exponents):
    e = mixed_multiplicities_polyhedral(MonomialIdeal.pure_powers(exponents))
    ordered = sorted(exponents)
    assert e.values == (ordered[0], ordered[0] * ordered[1], ordered[0] * ordered[1] * ordered[2])


def test_interpolation_predicts_unused_points():
    polyhedron = newton_polyhedron([(2, 0), (1, 1), (0, 3)])
    assert bhattacharya_value(polyhedron, 1, 1) == 10
    assert bhattacharya_value(polyhedron, 2, 1) == bhattacharya_prediction((2, 5), 2, 1)


@pytest.mark.parametrize("t", [2, 3])
def test_homogeneity_in_powers(t):
    base = monomial((2, 0), (1, 1), (0, 3))
    e = mixed_multiplicities_polyhedral(base.power(t))
    assert e.values == (2 * t, 5 * t ** 2)


def test_polyhedral_needs_finite_colength():
    with pytest.raises(InfiniteColengthError):
        mixed_multiplicities_polyhedral(monomial((1, 1), (3, 0)))


def test_generic_surprise(surprise):
    e = mixed_multiplicities_generic(surprise, seed=0, trials=3)
    assert e.values == (1, 3)
    assert e.method == GENERIC
    assert e.trials == 3


def test_generic_agrees_with_polyhedral(ideal):
    diagonal = ideal("x^2; y^4")
    assert mixed_multiplicities_generic(diagonal, seed=1).values == (2, 8)
    assert mixed_multiplicities_generic(ideal("x; y")).values == (1, 1)


def test_generic_is_deterministic_per_seed(contraex_j):
    first = mixed_multiplicities_generic(contraex_j, seed=5)
    second = mixed_multiplicities_generic(contraex_j, seed=5)
    assert first == second
    assert first.values == (2, 8)


def test_generic_infinite_colength(ideal):
    with pytest.raises(InfiniteColengthError):
        mixed_multiplicities_generic(ideal("x + y^2"), trials=2)


def test_dispatch_by_presentation(staircase, surprise):
    assert mixed_multiplicities(staircase).method == POLYHEDRAL
    assert mixed_multiplicities(surprise).method == GENERIC
    assert samuel_multiplicity(staircase) == 5
    assert samuel_multiplicity(surprise) == 3


@pytest.mark.parametrize(
    "gens, expected",
    [("x+y^2; y^3", 1), ("x^2; y^4", 2), ("x^3; x^2*y; x*y^2; y^3", 3), ("x^2 + y^4; x*y^2", 2)],
)
def test_order(ideal, gens, expected):
    assert ord_(ideal(gens)) == expected


def test_chain_and_vector_validation():
    assert MixedMultiplicityVector((2, 5)).chain_holds()
    assert not MixedMultiplicityVector((3, 4)).chain_holds()
    assert MixedMultiplicityVector((2, 5)).with_unit() == (1, 2, 5)
    with pytest.raises(ValueError):
        MixedMultiplicityVector((0, 3))


@pytest.mark.parametrize(
    "f, expected",
    [("x^3 + y^3", (2, 4)), ("x^2 + y^2", (1, 1)), ("x^2 + y^5", (1, 4))],
)
def test_milnor_vector(ideal, f, expected):
    assert milnor_vector(ideal(f).generators[0]).values == expected


def test_milnor_vector_of_non_isolated_singularity(ideal):
    with pytest.raises(NonIsolatedSingularityError):
        milnor_vector(ideal("x^2*y").generators[0])


def test_milnor_vector_of_non_monomial_jacobian(ideal):
    # f = x^3 + x*y^2 + y^4: J(f) = <3x^2 + y^2, 2xy + 4y^3>
    f = ideal("x^3 + x*y^2 + y^4").generators[0]
    vector = milnor_vector(f, trials=2)
    assert vector.method == GENERIC
    assert vector.values[0] == 2
    assert vector.chain_holds()


def test_vector_of_presentation_from_monomials():
    presentation = IdealPresentation.from_monomials([(3, 0), (0, 2)])
    assert mixed_multiplicities(presentation).values == (2, 6)


@pytest.mark.parametrize("n, j", [(2, 1), (3, 1), (3, 2)])
def test_section_embeddings_have_no_zero_entries(n, j):
    for seed in range(40):
        matrix = _random_embedding(n, j, random.Random(seed), 2)
        assert all(all(row) for row in matrix)
