"""
Degeneration experiments: t*DP and t*lct of ini(phi*(I)^t)
"""
from fractions import Fraction

import pytest

from core.errors import PowerCapExceeded
from invariants.convergence import convergence_experiment
from invariants.lct import FAIL, NOT_APPLICABLE, PASS


def test_identity_on_monomial_ideal_has_no_gap(staircase):
    table = convergence_experiment(staircase, 3, identity=True, known_lct=Fraction(1))
    assert table.change.is_identity()
    assert [row.t for row in table.rows] == [1, 2, 3]
    for row in table.rows:
        assert row.t_dp == Fraction(9, 10)
        assert row.t_lct == 1
        assert row.gap == 0
        assert row.scaled_e == (2, 5)
        assert row.lct_le_known == PASS
    assert table.trend == "nonincreasing"
    assert table.bounds_hold


@pytest.mark.parametrize("seed", [0, 1])
def test_contraex_rows_stay_below_known_lct(contraex_i, seed):
    table = convergence_experiment(contraex_i, 4, seed, known_lct=Fraction(3, 4), trials=2)
    assert table.error is None
    assert [row.t for row in table.rows] == [1, 2, 3, 4]
    assert table.dp == Fraction(3, 4)
    assert not table.change.is_identity()
    for row in table.rows:
        assert row.t_dp <= row.t_lct <= Fraction(3, 4)
    assert table.bounds_hold


def test_lct_column_without_known_value(surprise):
    table = convergence_experiment(surprise, 2, seed=3, trials=2)
    assert {row.lct_le_known for row in table.rows} == {NOT_APPLICABLE}
    assert table.dp == Fraction(4, 3)
    assert table.trend in ("nonincreasing", "mixed")


def test_random_change_is_seeded(surprise):
    first = convergence_experiment(surprise, 1, seed=4, trials=1)
    second = convergence_experiment(surprise, 1, seed=4, trials=1)
    assert first.change == second.change
    assert first.rows == second.rows


def test_failed_bound_is_reported(staircase):
    table = convergence_experiment(staircase, 1, identity=True, known_lct=Fraction(1, 2))
    assert table.rows[0].lct_le_known == FAIL
    assert not table.bounds_hold


def test_degree_cap_stops_run_early(ideal):
    # phi*(m) stays linear, its square does not
    table = convergence_experiment(ideal("x; y"), 3, seed=0, degree_cap=1)
    assert len(table.rows) == 1
    assert table.error.startswith("t=2")
    assert table.rows[0].initial_generators == ((0, 1), (1, 0))


def test_tmax_cap(staircase):
    with pytest.raises(PowerCapExceeded):
        convergence_experiment(staircase, 50)
    with pytest.raises(ValueError):
        convergence_experiment(staircase, 0)


def test_table_rows_render(staircase):
    table = convergence_experiment(staircase, 1, identity=True)
    header, row = table.as_rows()
    assert header[0] == "t"
    assert row == ["1", "9/10", "1", PASS, NOT_APPLICABLE, "0", "2,5"]
