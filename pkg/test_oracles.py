"""
Brute-force oracles against the analytic engine
"""
from fractions import Fraction

import pytest

from core.errors import DegreeCapExceeded, InfiniteColengthError, NotMonomialError
from core.monomial_ideal import MonomialIdeal
from invariants.lct import FAIL, PASS
from invariants.newton import covolume, newton_polyhedron, simplex_polyhedron
from services.oracles import (
    grid_scales,
    lattice_covolume,
    lattice_series,
    lower_hull,
    run_oracles,
    shoelace_covolume,
    staircase_colength,
    truncated_colength,
)


def test_staircase_colength():
    assert staircase_colength(MonomialIdeal.maximal_ideal_power(2, 2)) == 3
    assert staircase_colength(MonomialIdeal.from_exponents([(2, 0), (1, 1), (0, 3)])) == 4
    assert staircase_colength(MonomialIdeal.maximal_ideal_power(3, 2)) == 4
    with pytest.raises(InfiniteColengthError):
        staircase_colength(MonomialIdeal.from_exponents([(1, 1)]))


def test_staircase_matches_sliced_count():
    ideal = MonomialIdeal.from_exponents([(3, 0, 0), (0, 4, 0), (0, 0, 2), (1, 1, 1), (2, 0, 1)])
    assert staircase_colength(ideal) == ideal.colength()


def test_lower_hull_drops_collinear_points():
    assert lower_hull([(2, 0), (1, 2), (0, 4)]) == [(0, 4), (2, 0)]
    assert lower_hull([(2, 0), (1, 1), (0, 3)]) == [(0, 3), (1, 1), (2, 0)]


def test_shoelace_examples():
    assert shoelace_covolume(MonomialIdeal.from_exponents([(2, 0), (0, 4)])) == 4
    assert shoelace_covolume(MonomialIdeal.from_exponents([(2, 0), (1, 1), (0, 3)])) == Fraction(5, 2)
    with pytest.raises(ValueError):
        shoelace_covolume(MonomialIdeal.maximal_ideal_power(3, 1))
    with pytest.raises(InfiniteColengthError):
        shoelace_covolume(MonomialIdeal.from_exponents([(1, 1), (3, 0)]))


def test_lattice_errors_halve():
    polyhedron = newton_polyhedron([(2, 0), (0, 4)])
    estimates, verdict = lattice_series(polyhedron, (8, 16, 32))
    assert [item.error for item in estimates] == [Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)]
    assert verdict == PASS


def test_lattice_estimate_never_undershoots():
    polyhedron = newton_polyhedron([(3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)])
    exact = covolume(polyhedron)
    for scale in (2, 4):
        assert lattice_covolume(polyhedron, scale) >= exact


def test_lattice_series_of_simplex_in_three_variables():
    _, verdict = lattice_series(simplex_polyhedron(3, 2), (2, 4, 8))
    assert verdict == PASS


def test_lattice_scale_must_be_positive():
    with pytest.raises(ValueError):
        lattice_covolume(simplex_polyhedron(2), 0)


def test_grid_scales():
    assert grid_scales(16) == (8, 16, 32)
    assert grid_scales(1) == (1, 2)


@pytest.mark.parametrize(
    "gens, expected",
    [("x^2; x*y; y^2", 3), ("x + y^2; y^3", 3), ("x^2 + y^4; x*y^2", 8), ("x; y", 1)],
)
def test_truncated_colength_matches_mora(ideal, gens, expected):
    assert truncated_colength(ideal(gens)) == expected


def test_truncated_colength_of_infinite_colength(ideal):
    with pytest.raises(DegreeCapExceeded):
        truncated_colength(ideal("x"), degree_cap=6)


def test_run_oracles_plane(staircase):
    record = run_oracles(staircase, grid=8)
    assert record.covolume == Fraction(5, 2)
    assert record.shoelace_match == PASS
    assert [item.scale for item in record.lattice] == [4, 8, 16]
    assert record.staircase_colength == record.mora_colength == 4
    assert record.agrees


def test_run_oracles_space(ideal):
    record = run_oracles(ideal("x^2; y^2; z^2; x*y*z", "x, y, z"), grid=4)
    assert record.shoelace is None
    assert record.shoelace_match is None
    assert record.lattice_trend != FAIL
    assert record.colength_match == PASS


def test_run_oracles_rejects_polynomial_input(surprise):
    with pytest.raises(NotMonomialError):
        run_oracles(surprise)
