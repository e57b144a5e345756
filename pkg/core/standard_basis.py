"""
Standard Basis - Mora's tangent cone algorithm under neglex
Weak normal forms with ecart-driven reducer choice, cut below the highest corner
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy.polys.monomials import monomial_divides
from sympy.polys.rings import PolyElement, PolyRing

from core.errors import DegreeCapExceeded
from core.ideal import IdealPresentation
from core.monomial_ideal import MonomialIdeal, exponents_of_degree, minimalize
from core.polynomial import ExponentVector, Polynomial, local_degree_ring, polynomial_ring

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 64


def _degree(p: PolyElement) -> int:
    return max(sum(m) for m in p.itermonoms())


def _ecart(p: PolyElement) -> int:
    return _degree(p) - sum(p.LM)


class MoraEngine:
    """
    One standard basis computation; all mutable state lives here.

    With a corner D set, m^D lies in the ideal: every polynomial is cut
    below degree D and the degree-D monomials belong to the basis
    implicitly. Under neglex their S-pairs with an element g are the cut
    multiples u*g, deg(u * LM(g)) = D, queued when g is added.

    track_corner lowers D whenever the leading ideal contains every
    monomial of some degree. That is only sound under a local degree
    order, where the tail of each element sits in degrees >= deg LM.
    """

    def __init__(
        self,
        n: int,
        degree_cap: int = DEFAULT_DEGREE_CAP,
        ring: Optional[PolyRing] = None,
        corner: Optional[int] = None,
        track_corner: bool = False,
    ):
        self.n = n
        self.ring = ring if ring is not None else polynomial_ring(n)
        self.degree_cap = degree_cap
        self.corner = corner
        self.track_corner = track_corner
        self.basis: List[PolyElement] = []
        self.ecarts: List[int] = []
        self.pairs: List[Tuple[int, int]] = []
        self.pending: List[PolyElement] = []
        self.reductions = 0

    def _check_degree(self, p: PolyElement):
        if p:
            degree = _degree(p)
            if degree > self.degree_cap:
                raise DegreeCapExceeded(degree, self.degree_cap)

    def _cut(self, p: PolyElement) -> PolyElement:
        if self.corner is None or not p:
            return p
        return Polynomial(p).truncate(self.corner).element

    def _reduce_by(self, h: PolyElement, g: PolyElement) -> PolyElement:
        """Cancel the leading term of h against g (LM(g) divides LM(h))."""
        lm_h, lc_h = h.LT
        lm_g, lc_g = g.LT
        quotient = self.ring.monomial_ldiv(lm_h, lm_g)
        self.reductions += 1
        return h - g.mul_term((quotient, self.ring.domain.quo(lc_h, lc_g)))

    def normal_form(self, h: PolyElement, reducers: List[PolyElement], ecarts: List[int]) -> PolyElement:
        """
        Mora weak normal form of h.

        Among the reducers whose leading monomial divides LM(h) the one
        with least ecart is used; h itself joins the reducers when its
        ecart is smaller than the chosen one.
        """
        reducers = list(reducers)
        ecarts = list(ecarts)
        h = self._cut(h)
        while h:
            lm = h.LM
            best: Optional[int] = None
            for index, g in enumerate(reducers):
                if monomial_divides(g.LM, lm) and (best is None or ecarts[index] < ecarts[best]):
                    best = index
            if best is None:
                return h
            h_ecart = _ecart(h)
            g = reducers[best]
            if ecarts[best] > h_ecart:
                reducers.append(h)
                ecarts.append(h_ecart)
            h = self._cut(self._reduce_by(h, g))
            self._check_degree(h)
        return h

    def _add(self, p: PolyElement):
        p = self._cut(p)
        if not p:
            return
        p = p.monic()
        self._check_degree(p)
        index = len(self.basis)
        self.basis.append(p)
        self.ecarts.append(_ecart(p))
        for other in range(index):
            self.pairs.append((other, index))
        if self.track_corner:
            self._lower_corner()
        elif self.corner is not None:
            for u in exponents_of_degree(self.n, self.corner - sum(p.LM)):
                multiple = self._cut(p.mul_monom(u))
                if multiple:
                    self.pending.append(multiple)

    def _lower_corner(self):
        corner = MonomialIdeal(tuple(g.LM for g in self.basis), self.n).highest_corner()
        if corner is not None and (self.corner is None or corner < self.corner):
            self.corner = corner
            logger.debug("Highest corner lowered to degree %d", corner)

    def _pair_key(self, pair: Tuple[int, int]):
        i, j = pair
        lcm = self.ring.monomial_lcm(self.basis[i].LM, self.basis[j].LM)
        return (max(self.ecarts[i], self.ecarts[j]), lcm, i, j)

    def _inverse(self, coeff):
        domain = self.ring.domain
        return domain.quo(domain.one, coeff)

    def _spoly(self, i: int, j: int) -> Optional[PolyElement]:
        f, g = self.basis[i], self.basis[j]
        lm_f, lm_g = f.LM, g.LM
        lcm = self.ring.monomial_lcm(lm_f, lm_g)
        if all(min(a, b) == 0 for a, b in zip(lm_f, lm_g)):
            # coprime leading monomials: the pair reduces to zero
            return None
        if self.track_corner and self.corner is not None and sum(lcm) >= self.corner:
            return None
        left = f.mul_term((self.ring.monomial_ldiv(lcm, lm_f), self._inverse(f.LC)))
        right = g.mul_term((self.ring.monomial_ldiv(lcm, lm_g), self._inverse(g.LC)))
        return self._cut(left - right)

    def run(self, generators: List[PolyElement]) -> List[PolyElement]:
        for g in generators:
            if g:
                self._add(g)
        while self.pairs or self.pending:
            if self.pending:
                s = self.pending.pop()
            else:
                pair = min(self.pairs, key=self._pair_key)
                self.pairs.remove(pair)
                s = self._spoly(*pair)
            if not s:
                continue
            self._check_degree(s)
            h = self.normal_form(s, self.basis, self.ecarts)
            if h:
                self._add(h)
        logger.debug(
            "Mora finished: %d elements, %d reductions, corner %s",
            len(self.basis),
            self.reductions,
            self.corner,
        )
        return self._minimal()

    def _minimal(self) -> List[PolyElement]:
        kept: List[PolyElement] = []
        for index, p in enumerate(self.basis):
            lm = p.LM
            redundant = False
            for other, q in enumerate(self.basis):
                if other == index:
                    continue
                if monomial_divides(q.LM, lm) and (q.LM != lm or other < index):
                    redundant = True
                    break
            if not redundant:
                kept.append(p)
        if self.corner is not None:
            leading = minimalize([p.LM for p in kept] + list(exponents_of_degree(self.n, self.corner)))
            present = {p.LM for p in kept}
            one = self.ring.domain.one
            kept.extend(self.ring.from_dict({e: one}) for e in leading if e not in present)
        return sorted(kept, key=lambda p: self.ring.order(p.LM), reverse=True)


def corner_degree(ideal: IdealPresentation, degree_cap: int = DEFAULT_DEGREE_CAP) -> Optional[int]:
    """
    Least D with m^D inside the ideal, None for infinite colength.

    Read off the leading ideal under a local degree order; neglex leading
    ideals may hold all of m^D while the ideal does not (<x + y^2, y^3>).
    """
    ring = local_degree_ring(ideal.n)
    engine = MoraEngine(ideal.n, degree_cap, ring=ring, track_corner=True)
    engine.run([g.element.set_ring(ring) for g in ideal.generators])
    return engine.corner


@dataclass(frozen=True)
class StandardBasis:
    """Standard basis of a presentation under neglex."""

    elements: Tuple[Polynomial, ...]
    source: IdealPresentation
    ordering: str = "neglex"
    degree_cap: int = DEFAULT_DEGREE_CAP
    corner: Optional[int] = None

    def leading_exponents(self) -> Tuple[ExponentVector, ...]:
        return tuple(p.leading_term()[0] for p in self.elements)

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.leading_exponents(), self.source.n)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Weak normal form of f against the basis, cut below the corner."""
        engine = MoraEngine(self.source.n, self.degree_cap, corner=self.corner)
        reducers = [p.element for p in self.elements]
        return Polynomial(engine.normal_form(f.element, reducers, [_ecart(p) for p in reducers]))

    def contains(self, f: Polynomial) -> bool:
        """Membership of f in the ideal generated in the local ring."""
        return f.is_zero() or self.reduce(f).is_zero()


@lru_cache(maxsize=256)
def _standard_basis(ideal: IdealPresentation, degree_cap: int) -> StandardBasis:
    corner = corner_degree(ideal, degree_cap)
    engine = MoraEngine(ideal.n, degree_cap, corner=corner)
    elements = engine.run([g.element for g in ideal.generators])
    basis = StandardBasis(tuple(Polynomial(p) for p in elements), ideal, "neglex", degree_cap, corner)
    if corner is None:
        logger.info("ℹ️ Initial ideal misses a pure power: colength is infinite")
    return basis


def standard_basis(ideal: IdealPresentation, degree_cap: int = DEFAULT_DEGREE_CAP) -> StandardBasis:
    """
    Local standard basis of the ideal under neglex.

    Raises:
        DegreeCapExceeded: some intermediate polynomial passed degree_cap
    """
    top = max(g.total_degree() for g in ideal.generators)
    if top > degree_cap:
        raise DegreeCapExceeded(top, degree_cap)
    return _standard_basis(ideal, degree_cap)


def initial_ideal(ideal: IdealPresentation, degree_cap: int = DEFAULT_DEGREE_CAP) -> MonomialIdeal:
    """Monomial ideal of neglex-leading monomials of all elements."""
    if ideal.is_monomial:
        return MonomialIdeal(ideal.monomial_exponents(), ideal.n)
    return standard_basis(ideal, degree_cap).initial_ideal()


def colength(ideal: IdealPresentation, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """dim O_n / I as the number of standard monomials of ini(I)."""
    return initial_ideal(ideal, degree_cap).colength()
