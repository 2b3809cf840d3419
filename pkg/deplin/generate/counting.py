"""Exact counts of trees, with unbounded integers.

Tables grow on demand and are kept for the life of the process.
"""
from functools import lru_cache

_rooted: list[int] = [0, 1]


def rooted_count(n: int) -> int:
    """t(n): unlabeled rooted trees on n vertices."""
    if n < 1:
        return 0
    while len(_rooted) <= n:
        k = len(_rooted) - 1
        total = 0
        for j in range(1, k + 1):
            total += _divisor_weight(j) * _rooted[k - j + 1]
        _rooted.append(total // k)
    return _rooted[n]


@lru_cache(maxsize=None)
def _divisor_weight(k: int) -> int:
    """Sum of d * t(d) over the divisors d of k."""
    return sum(d * rooted_count(d) for d in range(1, k + 1) if k % d == 0)


def free_count(n: int) -> int:
    """Unlabeled free trees on n vertices, by Otter's dissimilarity formula."""
    if n < 1:
        return 0
    pairs = sum(rooted_count(i) * rooted_count(n - i) for i in range(1, n))
    if n % 2 == 0:
        pairs -= rooted_count(n // 2)
    return rooted_count(n) - pairs // 2


@lru_cache(maxsize=None)
def restricted_rooted_count(n: int, m: int) -> int:
    """Unlabeled rooted trees on n vertices whose root branches have at most m vertices."""
    if n < 1:
        return 0
    if n == 1:
        return 1
    total = 0
    for d in range(1, min(m, n - 1) + 1):
        weight = d * rooted_count(d)
        j = 1
        while j * d <= n - 1:
            total += weight * restricted_rooted_count(n - j * d, m)
            j += 1
    return total // (n - 1)


def bicentroidal_count(n: int) -> int:
    """Free trees on n vertices with two centroidal vertices."""
    if n % 2:
        return 0
    t = rooted_count(n // 2)
    return t * (t + 1) // 2


def labeled_free_count(n: int) -> int:
    return 1 if n <= 2 else n ** (n - 2)


def labeled_rooted_count(n: int) -> int:
    return n ** (n - 1)
