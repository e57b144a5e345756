"""
lct, DP, diagonality, the inequality audit and the Rees-type comparison
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import ContainmentError, InternalConsistencyError, NonPositiveEntryError
from core.ideal_ops import LinearChange
from core.monomial_ideal import MonomialIdeal
from invariants.lct import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    UNDETERMINED,
    DpPoint,
    LctResult,
    audit_inequalities,
    decide_diagonal,
    dp_function,
    dp_sum,
    howald_probe,
    in_D,
    is_diagonal,
    lct_monomial,
    rees_compare,
    resolve_lct,
    sandwich,
)
from invariants.multiplicity import GENERIC, MixedMultiplicityVector, mixed_multiplicities_polyhedral
from invariants.newton import newton_polyhedron, polyhedron_of_ideal, simplex_polyhedron
from services.corpus import dominating_d_point, random_d_point

DIAGONAL = MonomialIdeal.from_exponents([(2, 0), (0, 4)])
STAIRCASE = MonomialIdeal.from_exponents([(2, 0), (1, 1), (0, 3)])
M = MonomialIdeal.maximal_ideal_power(2, 1)
M2 = MonomialIdeal.maximal_ideal_power(2, 2)


def audit_of(ideal: MonomialIdeal):
    presentation = ideal.to_presentation()
    e = mixed_multiplicities_polyhedral(ideal)
    polyhedron = newton_polyhedron(ideal.generators)
    return audit_inequalities(presentation, e, sandwich(presentation, e), polyhedron, ideal.order())


# ----- lct and DP -----------------------------------------------------------

def test_lct_monomial_examples():
    assert lct_monomial(newton_polyhedron(DIAGONAL.generators)) == Fraction(3, 4)
    assert lct_monomial(simplex_polyhedron(3, 2)) == Fraction(3, 2)
    assert lct_monomial(simplex_polyhedron(2, 5)) == Fraction(2, 5)
    assert lct_monomial(newton_polyhedron(STAIRCASE.generators)) == 1


def test_howald_probe():
    probe = howald_probe(newton_polyhedron(DIAGONAL.generators))
    assert probe["mu0"] == Fraction(4, 3)
    assert probe["on_boundary"] is True
    assert probe["inside_below"] is False


def test_dp_sum_examples():
    assert dp_sum(MixedMultiplicityVector((2, 8))) == Fraction(3, 4)
    assert dp_sum(MixedMultiplicityVector((2, 5))) == Fraction(9, 10)
    assert dp_sum((3, 9, 27)) == 1


def test_dp_function_and_membership():
    assert dp_function((2, 8)) == Fraction(3, 4)
    assert dp_function(DpPoint((Fraction(1, 2), Fraction(1, 4)))) == 4
    assert in_D((2, 8))
    assert not in_D((3, 4))
    with pytest.raises(NonPositiveEntryError):
        DpPoint((1, 0))


def test_lct_result_checks_its_bounds():
    with pytest.raises(InternalConsistencyError):
        LctResult(Fraction(1), Fraction(1, 2))
    assert LctResult(Fraction(3, 4), Fraction(3, 4), Fraction(3, 4)).arnold == Fraction(4, 3)


# ----- diagonality ------------------------------------------------------------

def test_is_diagonal_examples():
    assert is_diagonal(DIAGONAL) == (True, (2, 4))
    assert is_diagonal(STAIRCASE) == (False, None)
    assert is_diagonal(M2) == (True, (2, 2))


def test_is_diagonal_of_non_diagonal_generators():
    # <x^2, x*y^2, y^4> has the same polyhedron as <x^2, y^4>
    assert is_diagonal(MonomialIdeal.from_exponents([(2, 0), (1, 2), (0, 4)])) == (True, (2, 4))


def test_decide_diagonal_for_polynomial_input(contraex_i, contraex_j):
    stable = MixedMultiplicityVector((2, 8), GENERIC)
    unstable = MixedMultiplicityVector((2, 8), GENERIC, stable=False)

    verdict = decide_diagonal(polyhedron_of_ideal(contraex_j), stable, is_monomial=False)
    assert verdict.verdict == PASS
    assert verdict.witness == (2, 4)

    polyhedron = polyhedron_of_ideal(contraex_i)
    assert decide_diagonal(polyhedron, stable, is_monomial=False).verdict == FAIL
    assert decide_diagonal(polyhedron, unstable, is_monomial=False).verdict == UNDETERMINED


def test_decide_diagonal_for_monomial_input():
    polyhedron = newton_polyhedron(STAIRCASE.generators)
    verdict = decide_diagonal(polyhedron, MixedMultiplicityVector((2, 5)), is_monomial=True)
    assert verdict.verdict == FAIL
    assert not verdict.is_diagonal


# ----- audit ------------------------------------------------------------------

def test_audit_diagonal_ideal():
    record = audit_of(DIAGONAL)
    assert record.multiplicity_chain.verdict == PASS
    assert record.dp_le_lct.verdict == PASS
    assert record.am_gm.verdict == PASS
    assert record.maximal_equality.verdict == NOT_APPLICABLE
    assert record.failures == ()


def test_audit_maximal_ideal_power_hits_equality():
    record = audit_of(MonomialIdeal.maximal_ideal_power(2, 3))
    assert record.maximal_equality.verdict == PASS
    assert record.maximal_equality.quantities["dp"] == "2/3"


def test_audit_staircase_is_strict():
    record = audit_of(STAIRCASE)
    assert record.dp_le_lct.verdict == PASS
    assert record.dp_le_lct.quantities == {"dp": "9/10", "lct": "1"}
    assert record.maximal_equality.verdict == NOT_APPLICABLE


# ----- comparison -------------------------------------------------------------

def test_rees_compare_same_closure():
    closure = MonomialIdeal.from_exponents([(2, 0), (1, 2), (0, 4)])
    comparison = rees_compare(DIAGONAL, closure)
    assert comparison.dp_first == comparison.dp_second == Fraction(3, 4)
    assert comparison.polyhedra_equal
    assert comparison.dp_monotone == PASS
    assert comparison.equality_iff_same_closure == PASS


def test_rees_compare_strict():
    comparison = rees_compare(M2, M)
    assert (comparison.dp_first, comparison.dp_second) == (1, 2)
    assert not comparison.polyhedra_equal
    assert comparison.equality_iff_same_closure == PASS

    comparison = rees_compare(STAIRCASE, MonomialIdeal.from_exponents([(1, 0), (0, 3)]))
    assert comparison.dp_first == Fraction(9, 10)
    assert comparison.dp_second == Fraction(4, 3)
    assert comparison.e_second == (1, 3)


def test_rees_compare_requires_containment():
    with pytest.raises(ContainmentError):
        rees_compare(M, M2)


# ----- sandwich ---------------------------------------------------------------

def test_sandwich_of_monomial_ideal_is_exact(staircase):
    result = sandwich(staircase, MixedMultiplicityVector((2, 5)))
    assert (result.lower_bound, result.upper_bound, result.exact) == (Fraction(9, 10), 1, 1)


def test_sandwich_of_surprise(surprise):
    result = sandwich(surprise, MixedMultiplicityVector((1, 3), GENERIC))
    assert (result.lower_bound, result.upper_bound) == (Fraction(4, 3), Fraction(3, 2))
    assert result.exact is None


def test_resolve_lct_with_monomializing_change(contraex_i):
    e = MixedMultiplicityVector((2, 8), GENERIC)
    plain = resolve_lct(contraex_i, e)
    assert (plain.lower_bound, plain.upper_bound, plain.exact) == (Fraction(3, 4), 1, None)

    resolved = resolve_lct(contraex_i, e, change=LinearChange.parse("1,-1;0,1"))
    assert resolved.exact == Fraction(3, 4)
    assert resolved.arnold == Fraction(4, 3)


def test_resolve_lct_computes_multiplicities(contraex_j):
    assert resolve_lct(contraex_j, seed=0, trials=2).exact == Fraction(3, 4)


# ----- the set D ----------------------------------------------------------------

@settings(max_examples=100)
@given(st.integers(min_value=0, max_value=10 ** 6), st.integers(min_value=1, max_value=4))
def test_dp_function_decreases_along_D(seed, n):
    rng = random.Random(seed)
    a = random_d_point(rng, n)
    b = dominating_d_point(rng, a)
    assert in_D(a) and in_D(b)
    assert all(x <= y for x, y in zip(a, b))
    assert dp_function(a) >= dp_function(b)
    assert (dp_function(a) == dp_function(b)) == (a == b)


@settings(max_examples=100)
@given(
    st.integers(min_value=0, max_value=10 ** 6),
    st.integers(min_value=1, max_value=4),
    st.fractions(min_value=0, max_value=1, max_denominator=8),
)
def test_D_is_convex(seed, n, lam):
    rng = random.Random(seed)
    s, t = random_d_point(rng, n), random_d_point(rng, n)
    assert in_D(tuple(lam * x + (1 - lam) * y for x, y in zip(s, t)))


@pytest.mark.parametrize("k, n", [(2, 2), (3, 3), (5, 1)])
def test_geometric_points_give_n_over_k(k, n):
    assert dp_function(tuple(k ** j for j in range(1, n + 1))) == Fraction(n, k)


# ----- closed forms -------------------------------------------------------------

def seeded_triple(seed: int):
    rng = random.Random(seed)
    return tuple(rng.randint(1, 9) for _ in range(3))


@pytest.mark.parametrize("seed", range(10))
def test_pure_power_triples(seed):
    exponents = seeded_triple(seed)
    a, b, c = exponents
    ideal = MonomialIdeal.pure_powers(exponents)
    e = mixed_multiplicities_polyhedral(ideal)
    lct = lct_monomial(newton_polyhedron(ideal.generators))
    s = sorted(exponents)
    assert e.values == (s[0], s[0] * s[1], s[0] * s[1] * s[2])
    assert lct == Fraction(1, a) + Fraction(1, b) + Fraction(1, c)
    assert dp_sum(e) == lct
    assert is_diagonal(ideal) == (True, exponents)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", range(1, 6))
def test_maximal_ideal_powers(n, k):
    ideal = MonomialIdeal.maximal_ideal_power(n, k)
    e = mixed_multiplicities_polyhedral(ideal)
    assert e.values == tuple(k ** j for j in range(1, n + 1))
    assert dp_sum(e) == lct_monomial(newton_polyhedron(ideal.generators)) == Fraction(n, k)
    record = audit_of(ideal)
    assert record.maximal_equality.verdict == PASS
    assert record.failures == ()
