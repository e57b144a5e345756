"""
Multiplicity - mixed multiplicities e_1..e_n of an ideal with the maximal ideal
Two independent paths: polyhedral interpolation (monomial ideals) and generic sections
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import (
    InfiniteColengthError,
    InternalConsistencyError,
    NonIsolatedSingularityError,
)
from core.ideal import IdealPresentation
from core.ideal_ops import (
    DEFAULT_COEFFICIENT_BOUND,
    generic_combinations,
    jacobian_ideal,
    nonzero_coefficient,
)
from core.linalg import rank, solve
from core.monomial_ideal import MonomialIdeal
from core.polynomial import Polynomial
from core.standard_basis import DEFAULT_DEGREE_CAP, colength, initial_ideal
from invariants.newton import (
    NewtonPolyhedron,
    covolume,
    minkowski_product,
    newton_polyhedron,
    simplex_polyhedron,
)

logger = logging.getLogger(__name__)

POLYHEDRAL = "polyhedral"
GENERIC = "generic-section"


@dataclass(frozen=True)
class MixedMultiplicityVector:
    """(e_1, ..., e_n) with the method that produced it."""

    values: Tuple[int, ...]
    method: str = POLYHEDRAL
    seeds: Tuple[int, ...] = ()
    trials: int = 1
    stable: bool = True

    def __post_init__(self):
        values = tuple(self.values)
        if not values or any(not isinstance(v, int) or v <= 0 for v in values):
            raise ValueError(f"mixed multiplicities must be positive integers, got {values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def e(self) -> int:
        """Samuel multiplicity e_n."""
        return self.values[-1]

    def with_unit(self) -> Tuple[int, ...]:
        """(e_0, e_1, ..., e_n) with e_0 = 1."""
        return (1,) + self.values

    def chain_holds(self) -> bool:
        """e_j^2 <= e_{j-1} e_{j+1} for j = 1..n-1."""
        t = self.with_unit()
        return all(t[j] ** 2 <= t[j - 1] * t[j + 1] for j in range(1, self.n))


# Milnor vectors are mixed multiplicity vectors of Jacobian ideals.
MilnorVector = MixedMultiplicityVector


# ----- order --------------------------------------------------------------

def ord_(ideal: IdealPresentation) -> int:
    """
    Largest r with I inside m^r.

    Equals the minimum term degree over the generators, and also over any
    standard basis, since every element is a combination of generators.
    """
    return min(g.order() for g in ideal.generators)


# ----- polyhedral path ----------------------------------------------------

def _power_polyhedron(base: NewtonPolyhedron, a: int) -> NewtonPolyhedron:
    result = base
    for _ in range(a - 1):
        result = minkowski_product(result, base)
    return result


def bhattacharya_value(polyhedron: NewtonPolyhedron, a: int, b: int) -> Fraction:
    """E(a, b) = n! * covolume(Gamma_+(I^a m^b)) for a >= 1."""
    n = polyhedron.n
    body = _power_polyhedron(polyhedron, a)
    if b:
        body = minkowski_product(body, simplex_polyhedron(n, b))
    return factorial(n) * covolume(body)


def bhattacharya_prediction(values: Sequence[int], a: int, b: int) -> int:
    """sum_j C(n,j) e_j a^j b^(n-j) with e_0 = 1."""
    n = len(values)
    e = (1,) + tuple(values)
    return sum(comb(n, j) * e[j] * a ** j * b ** (n - j) for j in range(n + 1))


def mixed_multiplicities_polyhedral(ideal: MonomialIdeal) -> MixedMultiplicityVector:
    """
    Fit E(1, b) = b^n + sum_j C(n,j) e_j b^(n-j) at b = 0..n-1.

    The fit is cross-checked against E(2, 1) and E(1, n), which it did
    not use.
    """
    if not ideal.is_finite_colength:
        raise InfiniteColengthError("mixed multiplicities need finite colength")
    n = ideal.n
    polyhedron = newton_polyhedron(ideal.generators)
    rows, rhs = [], []
    for b in range(n):
        rows.append([b ** (n - j) for j in range(1, n + 1)])
        rhs.append(bhattacharya_value(polyhedron, 1, b) - b ** n)
    scaled = solve(rows, rhs)
    values = []
    for j, u in enumerate(scaled, start=1):
        e_j = u / comb(n, j)
        if e_j.denominator != 1:
            raise InternalConsistencyError(f"non-integral mixed multiplicity e_{j} = {e_j}")
        values.append(int(e_j))
    for a, b in ((2, 1), (1, n)):
        expected = bhattacharya_prediction(values, a, b)
        actual = bhattacharya_value(polyhedron, a, b)
        if actual != expected:
            raise InternalConsistencyError(
                f"interpolation check failed at E({a},{b}): {actual} != {expected}"
            )
    return MixedMultiplicityVector(tuple(values), POLYHEDRAL)


# ----- generic-section path -----------------------------------------------

def _trial_seed(seed: int, j: int, trial: int) -> int:
    return seed * 1_000_003 + j * 1_009 + trial


def _random_embedding(n: int, j: int, rng: random.Random, bound: int) -> List[List[int]]:
    """n x j matrix of rank j with nonzero integer entries."""
    while True:
        matrix = [[nonzero_coefficient(rng, bound) for _ in range(j)] for _ in range(n)]
        if rank(matrix) == j:
            return matrix


def section_colength(
    ideal: IdealPresentation,
    j: int,
    seed: int,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> int:
    """
    Colength of j generic combinations of I restricted to a random j-plane.

    Raises:
        InfiniteColengthError: the draw was not generic (or I has infinite colength)
    """
    n = ideal.n
    rng = random.Random(seed)
    if j == n:
        restricted = list(ideal.generators)
    else:
        matrix = _random_embedding(n, j, rng, bound)
        forms = [Polynomial.linear_form(row) for row in matrix]
        restricted = [g.substitute(forms) for g in ideal.generators]
        restricted = [g for g in restricted if not g.is_zero()]
        if not restricted:
            raise InfiniteColengthError("every generator vanishes on the sampled plane")
    section = IdealPresentation(tuple(restricted))
    combos = generic_combinations(section, j, rng.randrange(2 ** 31), bound)
    return colength(combos, degree_cap)


def mixed_multiplicities_generic(
    ideal: IdealPresentation,
    seed: int = 0,
    trials: int = 3,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> MixedMultiplicityVector:
    """
    e_j as the colength of a generic j-section, minimized over trials.

    Every trial over-estimates or hits e_j, so the minimum is reported and
    disagreement between trials clears the stability flag. A trial whose
    section has infinite colength is discarded.
    """
    n = ideal.n
    values = []
    stable = True
    used_seeds = []
    for j in range(1, n + 1):
        samples: Dict[int, int] = {}
        for trial in range(trials):
            trial_seed = _trial_seed(seed, j, trial)
            try:
                samples[trial_seed] = section_colength(ideal, j, trial_seed, bound, degree_cap)
            except InfiniteColengthError:
                logger.info("ℹ️ Non-generic draw for e_%d (seed %d), retrying", j, trial_seed)
        if not samples:
            raise InfiniteColengthError(f"no section of dimension {j} has finite colength")
        ordered = [samples[s] for s in sorted(samples)]
        if len(set(ordered)) > 1:
            stable = False
            logger.warning("⚠️ Unstable generic trials for e_%d: %s", j, ordered)
        values.append(min(ordered))
        used_seeds.extend(sorted(samples))
    return MixedMultiplicityVector(tuple(values), GENERIC, tuple(used_seeds), trials, stable)


def samuel_multiplicity(ideal: IdealPresentation, seed: int = 0, trials: int = 3) -> int:
    if ideal.is_monomial:
        monomial = MonomialIdeal(ideal.monomial_exponents(), ideal.n)
        return mixed_multiplicities_polyhedral(monomial).e
    return mixed_multiplicities_generic(ideal, seed, trials).e


def mixed_multiplicities(
    ideal: IdealPresentation,
    seed: int = 0,
    trials: int = 3,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> MixedMultiplicityVector:
    """Polyhedral path for monomial presentations, generic sections otherwise."""
    if ideal.is_monomial:
        return mixed_multiplicities_polyhedral(MonomialIdeal(ideal.monomial_exponents(), ideal.n))
    return mixed_multiplicities_generic(ideal, seed, trials, bound, degree_cap)


def milnor_vector(
    f: Polynomial,
    seed: int = 0,
    trials: int = 3,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    variables: Optional[Sequence[str]] = None,
) -> MilnorVector:
    """
    (mu^(1), ..., mu^(n)) = mixed multiplicities of the Jacobian ideal.

    Raises:
        NonIsolatedSingularityError: J(f) has infinite colength
    """
    jacobian = jacobian_ideal(f, variables)
    try:
        if not initial_ideal(jacobian, degree_cap).is_finite_colength:
            raise NonIsolatedSingularityError("Jacobian ideal has infinite colength")
        return mixed_multiplicities(jacobian, seed, trials, bound, degree_cap)
    except NonIsolatedSingularityError:
        raise
    except InfiniteColengthError as e:
        raise NonIsolatedSingularityError(f"singularity is not isolated: {e}")
