# src/arith.py

"""
Exact arithmetic foundation.

QPoly and RatFunc are elements of sympy's sparse polynomial ring QQ[q] and of
its fraction field QQ(q). The fraction field cancels on construction, which
gives the canonical form used everywhere: coprime integer numerator and
denominator, denominator with positive leading coefficient. MPoly values live
in sympy rings QQ[x_11, ..., x_nn] built on demand. TruncSeries is a
box-truncated multivariate power series over any of these coefficient domains.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field as fraction_field
from sympy.polys.rings import PolyElement, PolyRing, ring

from .errors import (
    IntegralityError,
    InvalidConstructionError,
    NonUnitalSeriesError,
    OrderMismatchError,
)
from .vectors import Vector, add, leq

logger = logging.getLogger(__name__)

QPoly = PolyElement
RatFunc = FracElement
MPoly = PolyElement

Q_FIELD, Q_FRAC = fraction_field("q", QQ)
Q_RING: PolyRing = Q_FIELD.ring
Q = Q_RING.gens[0]


# ==================== SCALARS ====================


def to_fraction(value: Any) -> Fraction:
    """Convert a sympy QQ/ZZ element (or int) to a Fraction"""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def to_qq(value: Fraction | int) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def fraction_to_int(value: Fraction, what: str = "value") -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


# ==================== QPOLY ====================


def qpoly(coefficients: Sequence[Fraction | int]) -> QPoly:
    """Build a QPoly from coefficients indexed by the exponent of q"""
    return Q_RING.from_dict(
        {(e,): to_qq(c) for e, c in enumerate(coefficients) if c}
    )


def qpoly_from_terms(terms: Mapping[int, Fraction | int]) -> QPoly:
    return Q_RING.from_dict({(e,): to_qq(c) for e, c in terms.items() if c})


def qpoly_degree(p: QPoly) -> int:
    """Degree in q, -1 for the zero polynomial"""
    return max((monom[0] for monom in p.keys()), default=-1)


def qpoly_coefficients(p: QPoly) -> List[Fraction]:
    """Dense coefficient list, index = exponent of q"""
    coefficients = [Fraction(0)] * (qpoly_degree(p) + 1)
    for (e,), c in p.items():
        coefficients[e] = to_fraction(c)
    return coefficients


def qpoly_terms(p: QPoly) -> List[tuple]:
    """(exponent, coefficient) pairs with nonzero coefficient, descending"""
    return sorted(
        ((e, to_fraction(c)) for (e,), c in p.items()), key=lambda t: -t[0]
    )


def qpoly_evaluate(p: QPoly, x: Fraction | int) -> Fraction:
    x = Fraction(x)
    return sum((to_fraction(c) * x**e for (e,), c in p.items()), Fraction(0))


def qpoly_substitute_power(p: QPoly, d: int) -> QPoly:
    """p(q) -> p(q^d)"""
    return Q_RING.from_dict({(e * d,): c for (e,), c in p.items()})


def qpoly_is_integral(p: QPoly) -> bool:
    return all(to_fraction(c).denominator == 1 for c in p.values())


def geometric_sum(length: int) -> QPoly:
    """1 + q + ... + q^(length-1), zero when length <= 0"""
    return Q_RING.from_dict({(j,): QQ(1) for j in range(max(length, 0))})


# ==================== TAYLOR DATA AT q = 1 ====================


def taylor_shift(p: QPoly) -> List[Fraction]:
    """Coefficients of (q-1)^t in p, t = 0..deg p"""
    shifted = [Fraction(0)] * (qpoly_degree(p) + 1)
    for (e,), c in p.items():
        c = to_fraction(c)
        for t in range(e + 1):
            shifted[t] += c * math.comb(e, t)
    return shifted


def qpoly_taylor_at_1(p: QPoly, t: int) -> Fraction:
    """t-th derivative of p with respect to q, evaluated at q = 1"""
    if t < 0:
        raise ValueError(f"Derivative order must be >= 0, got {t}")
    return sum(
        (to_fraction(c) * math.perm(e, t) for (e,), c in p.items()), Fraction(0)
    )


def vanishing_order_at_1(p: QPoly) -> int:
    """Multiplicity of the root q = 1 (infinite order is reported as -1)"""
    for t, c in enumerate(taylor_shift(p)):
        if c:
            return t
    return -1


def taylor_coefficients_at_1(f: RatFunc, order: int) -> List[Fraction]:
    """Coefficients of (q-1)^t, t = 0..order, of a RatFunc regular at q = 1"""
    numerator = taylor_shift(f.numer) + [Fraction(0)] * (order + 1)
    denominator = taylor_shift(f.denom) + [Fraction(0)] * (order + 1)
    if not denominator[0]:
        raise OrderMismatchError(
            "Rational function has a pole at q = 1",
            actual_order=vanishing_order_at_1(f.denom),
        )
    result: List[Fraction] = []
    for t in range(order + 1):
        acc = numerator[t] - sum(
            denominator[i] * result[t - i] for i in range(1, t + 1)
        )
        result.append(acc / denominator[0])
    return result


# ==================== RATFUNC ====================


def ratfunc_normalize(num: QPoly, den: QPoly) -> RatFunc:
    """num/den in canonical form (coprime, primitive, den leading coeff > 0)"""
    if not den:
        raise InvalidConstructionError("Rational function with zero denominator")
    return Q_FIELD.new(num, den)


def ratfunc(p: QPoly | int) -> RatFunc:
    if isinstance(p, int):
        return Q_FIELD(p)
    return Q_FIELD.new(p)


def ratfunc_evaluate(f: RatFunc, x: Fraction | int) -> Fraction:
    den = qpoly_evaluate(f.denom, x)
    if not den:
        raise ZeroDivisionError(f"Rational function has a pole at q = {x}")
    return qpoly_evaluate(f.numer, x) / den


def ratfunc_substitute_power(f: RatFunc, d: int) -> RatFunc:
    """f(q) -> f(q^d), renormalized"""
    if d == 1:
        return f
    return ratfunc_normalize(
        qpoly_substitute_power(f.numer, d), qpoly_substitute_power(f.denom, d)
    )


def ratfunc_as_qpoly(f: RatFunc, integral: bool = True) -> QPoly:
    """Return f as a QPoly; raise if f is not a polynomial (with integer coefficients)"""
    if qpoly_degree(f.denom) > 0:
        raise IntegralityError(f"Expected a polynomial in q, got ({f.numer})/({f.denom})")
    p = f.numer.quo_ground(f.denom.LC)
    if integral and not qpoly_is_integral(p):
        raise IntegralityError(f"Polynomial {p} has non-integer coefficients")
    return p


def ratfunc_limit_with_pole_cancellation(f: RatFunc, e: int) -> Fraction:
    """Value of (q-1)^e * f at q = 1"""
    num, den = f.numer, f.denom
    if e >= 0:
        num = num * (Q - 1) ** e
    else:
        den = den * (Q - 1) ** (-e)
    g = ratfunc_normalize(num, den)
    pole = vanishing_order_at_1(g.denom)
    if pole > 0:
        raise OrderMismatchError(
            f"(q-1)^{e} * f still has a pole of order {pole} at q = 1",
            actual_order=pole,
        )
    return ratfunc_evaluate(g, 1)


# ==================== MPOLY ====================


@lru_cache(maxsize=None)
def mpoly_ring(names: tuple) -> PolyRing:
    """QQ[names], cached so equal name tuples share one ring"""
    return ring(",".join(names), QQ)[0]


def mpoly_truncate(p: MPoly, budget: int) -> MPoly:
    """Drop every term of total degree > budget"""
    return p.ring.from_dict({m: c for m, c in p.items() if sum(m) <= budget})


def mpoly_terms(p: MPoly) -> Dict[Vector, Fraction]:
    return {tuple(m): to_fraction(c) for m, c in p.items()}


# ==================== TRUNCATED SERIES ====================


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """
    Power series in len(bound) variables truncated to the box beta <= bound.

    `one` is the multiplicative identity of the coefficient domain; the
    optional `truncate` hook is applied to every coefficient after each
    operation (used for x-degree budgets on MPoly coefficients).
    """

    bound: Vector
    coeffs: Mapping[Vector, Any]
    one: Any
    truncate: Optional[Callable[[Any], Any]] = field(default=None, repr=False)

    def __post_init__(self):
        cleaned = {}
        for beta, c in self.coeffs.items():
            beta = tuple(beta)
            if not leq(beta, self.bound):
                continue
            if self.truncate is not None:
                c = self.truncate(c)
            if c:
                cleaned[beta] = c
        object.__setattr__(self, "bound", tuple(self.bound))
        object.__setattr__(self, "coeffs", MappingProxyType(cleaned))

    @property
    def zero(self) -> Any:
        return self.one * 0

    @classmethod
    def constant(cls, bound, value, truncate=None, one=None) -> "TruncSeries":
        zero_exponent = tuple(0 for _ in bound)
        return cls(bound, {zero_exponent: value}, value if one is None else one, truncate)

    def _like(self, coeffs: Mapping[Vector, Any]) -> "TruncSeries":
        return TruncSeries(self.bound, coeffs, self.one, self.truncate)

    def coefficient(self, beta: Sequence[int]) -> Any:
        return self.coeffs.get(tuple(beta), self.zero)

    @property
    def constant_term(self) -> Any:
        return self.coefficient(tuple(0 for _ in self.bound))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        coeffs = dict(self.coeffs)
        for beta, c in other.coeffs.items():
            coeffs[beta] = coeffs[beta] + c if beta in coeffs else c
        return self._like(coeffs)

    def __neg__(self) -> "TruncSeries":
        return self._like({beta: -c for beta, c in self.coeffs.items()})

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        coeffs: Dict[Vector, Any] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                beta = add(a, b)
                if not leq(beta, self.bound):
                    continue
                term = ca * cb
                coeffs[beta] = coeffs[beta] + term if beta in coeffs else term
        return self._like(coeffs)

    def scale(self, numerator: int, denominator: int = 1) -> "TruncSeries":
        return self._like(
            {beta: c * numerator / denominator for beta, c in self.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.bound == other.bound and dict(self.coeffs) == dict(other.coeffs)


def series_log(s: TruncSeries) -> TruncSeries:
    """log(s) = sum_{m>=1} (-1)^(m+1) (s-1)^m / m, truncated to s.bound"""
    if s.constant_term != s.one:
        raise NonUnitalSeriesError(
            f"series_log needs constant term 1, got {s.constant_term}"
        )
    u = s - TruncSeries.constant(s.bound, s.one, s.truncate)
    result = s._like({})
    power = u
    m = 1
    while not power.is_zero():
        result = result + power.scale((-1) ** (m + 1), m)
        power = power * u
        m += 1
    logger.debug("series_log over box %s used %d powers", s.bound, m - 1)
    return result


def series_exp(s: TruncSeries) -> TruncSeries:
    """exp(s) for a series without constant term, truncated to s.bound"""
    if s.constant_term:
        raise NonUnitalSeriesError("series_exp needs a series with zero constant term")
    result = TruncSeries.constant(s.bound, s.one, s.truncate)
    term = result
    m = 1
    while True:
        term = (term * s).scale(1, m)
        if term.is_zero():
            break
        result = result + term
        m += 1
    return result
