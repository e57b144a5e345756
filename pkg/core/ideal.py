"""
Ideal Presentation - finite generating systems of ideals in O_n
Generators are polynomials; the analytic ring is only ever seen through them
"""
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from core.errors import DimensionMismatchError, ZeroGeneratorError
from core.polynomial import ExponentVector, Polynomial, default_names


@dataclass(frozen=True)
class IdealPresentation:
    """Nonempty list of nonzero generators sharing one ambient dimension."""

    generators: Tuple[Polynomial, ...]
    variables: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        generators = tuple(self.generators)
        if not generators:
            raise ValueError("an ideal presentation needs at least one generator")
        n = generators[0].n
        for g in generators:
            if g.n != n:
                raise DimensionMismatchError("generators live in different ambient dimensions")
            if g.is_zero():
                raise ZeroGeneratorError("zero generator in ideal presentation")
        variables = tuple(self.variables) or default_names(n)
        if len(variables) != n:
            raise DimensionMismatchError(f"{len(variables)} variable names for {n} variables")
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "variables", variables)

    @classmethod
    def from_monomials(
        cls, exponents: Iterable[Sequence[int]], variables: Optional[Sequence[str]] = None
    ) -> "IdealPresentation":
        gens = tuple(Polynomial.monomial(e) for e in exponents)
        return cls(gens, tuple(variables or ()))

    @property
    def n(self) -> int:
        return self.generators[0].n

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def monomial_exponents(self) -> Tuple[ExponentVector, ...]:
        """Exponents of a monomial presentation (coefficients are units)."""
        if not self.is_monomial:
            raise ValueError("presentation is not monomial")
        return tuple(g.leading_term()[0] for g in self.generators)

    def supports(self) -> Tuple[ExponentVector, ...]:
        """Union of the generator supports, sorted."""
        points = set()
        for g in self.generators:
            points.update(g.support())
        return tuple(sorted(points))

    def with_generators(self, generators: Iterable[Polynomial]) -> "IdealPresentation":
        return IdealPresentation(tuple(generators), self.variables)

    def rendered_generators(self) -> Tuple[str, ...]:
        return tuple(g.render(self.variables) for g in self.generators)

    def render(self) -> str:
        """Ideal file text accepted by parse_ideal."""
        lines = ["vars: " + ", ".join(self.variables), "gens:"]
        lines.extend(self.rendered_generators())
        return "\n".join(lines) + "\n"
