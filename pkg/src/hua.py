# src/hua.py

"""
Kac polynomials via Hua's formula.

    P(T, q) = sum over multipartitions (l^1, ..., l^n) of
              prod_{i<=j} q^(g_ij <l^i, l^j>) * prod_i 1/(q^<l^i,l^i> b_{l^i}(1/q)) * T^|l|

    log P(T, q) = sum_{alpha != 0} H(alpha, q) / gcd(alpha) * T^alpha   (implicit definition of H)

    A(alpha, q) = (q - 1)/abar * sum_{d | abar} mu(d) H(alpha/d, q^d),  abar = gcd(alpha)
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from langsmith import traceable
from sympy import divisors, factorint

from .arith import (
    Q,
    Q_FIELD,
    Q_RING,
    QPoly,
    RatFunc,
    TruncSeries,
    fraction_to_int,
    qpoly_taylor_at_1,
    ratfunc_as_qpoly,
    ratfunc_normalize,
    ratfunc_substitute_power,
    series_log,
)
from .state import Quiver
from .vectors import Vector, box, edge_pairs, vector_gcd

logger = logging.getLogger(__name__)


# ==================== PARTITIONS ====================


@dataclass(frozen=True)
class Partition:
    """Integer partition, parts weakly decreasing"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or any(
            a < b for a, b in zip(self.parts, self.parts[1:])
        ):
            raise ValueError(f"Not a partition: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> Tuple[int, ...]:
        """l'_i = number of parts >= i"""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1))

    def multiplicities(self) -> Dict[int, int]:
        """n_i = number of parts equal to i"""
        return dict(Counter(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


MultiPartition = Tuple[Partition, ...]


def _partitions_with_max(m: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_with_max(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(m: int) -> Tuple[Partition, ...]:
    """Partitions of m, largest first part first"""
    return tuple(Partition(parts) for parts in _partitions_with_max(m, m))


def partitions_up_to(N: int) -> List[Partition]:
    """Every partition of 0, 1, ..., N exactly once, by size then reverse lexicographic"""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    return [lam for m in range(N + 1) for lam in partitions_of(m)]


@lru_cache(maxsize=None)
def pairing(lam: Partition, mu: Partition) -> int:
    """<l, m> = sum_i l'_i m'_i"""
    return sum(a * b for a, b in zip(lam.transpose(), mu.transpose()))


@lru_cache(maxsize=None)
def b_lambda_inverse_factor(lam: Partition) -> RatFunc:
    """
    1 / (q^<l,l> b_l(1/q)) with b_l(1/q) = prod_i prod_{j<=n_i} (1 - q^-j).

    Since 1 - q^-j = (q^j - 1)/q^j this equals q^E / prod (q^j - 1) with
    E = sum_i n_i(n_i + 1)/2 - <l,l>.
    """
    exponent = -pairing(lam, lam)
    denominator = Q_RING.one
    for count in lam.multiplicities().values():
        for j in range(1, count + 1):
            exponent += j
            denominator *= Q**j - 1
    if exponent >= 0:
        return ratfunc_normalize(Q**exponent, denominator)
    return ratfunc_normalize(Q_RING.one, denominator * Q ** (-exponent))


def multipartitions(beta: Vector) -> Iterator[MultiPartition]:
    return itertools.product(*(partitions_of(b) for b in beta))


# ==================== HUA SERIES ====================


def _multipartition_term(quiver: Quiver, lams: MultiPartition) -> RatFunc:
    exponent = sum(
        g * pairing(lams[i], lams[j])
        for (i, j), g in zip(edge_pairs(quiver.n), quiver.g)
        if g
    )
    term = Q_FIELD(Q**exponent)
    for lam in lams:
        term *= b_lambda_inverse_factor(lam)
    return term


def hua_P_coefficients(quiver: Quiver, alpha: Vector) -> TruncSeries:
    """Coefficients of T^beta, beta <= alpha, of Hua's generating function"""
    alpha = tuple(alpha)
    if len(alpha) != quiver.n or not any(alpha):
        raise ValueError(f"Dimension vector {alpha} must be nonzero of length {quiver.n}")
    return _hua_P_coefficients(quiver, alpha)


@lru_cache(maxsize=256)
def _hua_P_coefficients(quiver: Quiver, alpha: Vector) -> TruncSeries:
    coeffs = {}
    for beta in box(alpha):
        total = Q_FIELD.zero
        for lams in multipartitions(beta):
            total += _multipartition_term(quiver, lams)
        coeffs[beta] = total
    logger.debug("Hua series for %s over box %s: %d coefficients", quiver.describe(), alpha, len(coeffs))
    return TruncSeries(alpha, coeffs, Q_FIELD.one)


@lru_cache(maxsize=256)
def hua_log_series(quiver: Quiver, alpha: Vector) -> TruncSeries:
    return series_log(hua_P_coefficients(quiver, tuple(alpha)))


def hua_H(quiver: Quiver, alpha: Vector) -> RatFunc:
    """H(alpha, q) = gcd(alpha) * [T^alpha] log P"""
    alpha = tuple(alpha)
    return hua_log_series(quiver, alpha).coefficient(alpha) * vector_gcd(alpha)


def mobius(d: int) -> int:
    exponents = factorint(d).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=1024)
def _kac_polynomial(quiver: Quiver, alpha: Vector) -> QPoly:
    abar = vector_gcd(alpha)
    log_series = hua_log_series(quiver, alpha)
    total = Q_FIELD.zero
    for d in divisors(abar):
        mu = mobius(d)
        if not mu:
            continue
        sub = tuple(a // d for a in alpha)
        h = log_series.coefficient(sub) * vector_gcd(sub)
        total += ratfunc_substitute_power(h, d) * mu
    result = total * Q_FIELD(Q - 1) / abar
    return ratfunc_as_qpoly(result, integral=True)


@traceable(name="kac_polynomial")
def kac_polynomial(quiver: Quiver, alpha: Vector) -> QPoly:
    """
    A(alpha, q) for the quiver, an integer polynomial in q.

    Raises IntegralityError if Hua's formula does not collapse to Z[q].
    """
    alpha = tuple(alpha)
    if len(alpha) != quiver.n:
        raise ValueError(f"Dimension vector {alpha} has length {len(alpha)}, quiver has n={quiver.n}")
    if any(a < 0 for a in alpha) or not any(alpha):
        raise ValueError(f"Dimension vector must be nonzero and nonnegative, got {alpha}")
    return _kac_polynomial(quiver, alpha)


def kac_derivative_at_1(quiver: Quiver, alpha: Vector, s: int) -> int:
    """s-th q-derivative of A(alpha, q) at q = 1"""
    value: Fraction = qpoly_taylor_at_1(kac_polynomial(quiver, alpha), s)
    return fraction_to_int(value, f"A^({s})(alpha={tuple(alpha)}, 1)")


def kac_degree_bound(quiver: Quiver, alpha: Vector) -> int:
    """1 - sum a_i^2 + sum_{i<j} g_ij a_i a_j + sum_i g_ii a_i^2, the degree of a nonzero A"""
    degree = 1 - sum(a * a for a in alpha)
    for (i, j), g in zip(edge_pairs(quiver.n), quiver.g):
        degree += g * alpha[i] * alpha[j]
    return degree

