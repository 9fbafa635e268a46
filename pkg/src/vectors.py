# src/vectors.py

"""
Integer vectors used throughout: dimension vectors (one entry per vertex) and
edge vectors (one entry per pair i <= j, in the order 11, 12, ..., 1n, 22, ...).
"""

import itertools
import math
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

Vector = Tuple[int, ...]


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs (i, j) with 0 <= i <= j < n, in edge-vector order"""
    return tuple((i, j) for i in range(n) for j in range(i, n))


def edge_count(n: int) -> int:
    return n * (n + 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Position of the pair {i, j} in an edge vector"""
    if i > j:
        i, j = j, i
    return edge_pairs(n).index((i, j))


def vertex_count(edge_length: int) -> int:
    """Recover n from an edge vector of length n(n+1)/2"""
    n = (math.isqrt(8 * edge_length + 1) - 1) // 2
    if edge_count(n) != edge_length or n < 1:
        raise ValueError(f"{edge_length} is not of the form n(n+1)/2")
    return n


def diagonal_positions(n: int) -> List[int]:
    """Positions of the loop entries k_ii inside an edge vector"""
    return [idx for idx, (i, j) in enumerate(edge_pairs(n)) if i == j]


def norm(v: Sequence[int]) -> int:
    """|v|, the sum of the entries"""
    return sum(v)


def vector_factorial(v: Sequence[int]) -> int:
    """v! = product of the factorials of the entries"""
    return math.prod(math.factorial(x) for x in v)


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b"""
    return all(x <= y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def box(bound: Sequence[int]) -> Iterator[Vector]:
    """All vectors 0 <= v <= bound, lexicographically"""
    return itertools.product(*(range(b + 1) for b in bound))


def compositions(total: int, parts: int) -> Iterator[Vector]:
    """All vectors of `parts` nonnegative entries summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def vector_gcd(v: Sequence[int]) -> int:
    return math.gcd(*v)


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a"""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)
