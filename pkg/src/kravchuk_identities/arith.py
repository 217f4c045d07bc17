"""Exact integer/rational combinatorics: binomials, Stirling numbers, S^(k).

Coefficients everywhere are Python ints (arbitrary precision) and
fractions.Fraction (always reduced, positive denominator).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 outside 0 <= k <= n.

    Polynomial (symbolic) arguments are handled by poly.binom_poly, not here.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling_first(m: int, k: int) -> int:
    """Signed Stirling number of the first kind s(m, k)."""
    if m < 0 or k < 0:
        raise ValueError("stirling_first: arguments must be >= 0")
    if m == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    if k > m:
        return 0
    # s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
    return stirling_first(m - 1, k - 1) - (m - 1) * stirling_first(m - 1, k)


@lru_cache(maxsize=None)
def stirling_second(n: int, j: int) -> int:
    """Stirling number of the second kind S(n, j)."""
    if n < 0 or j < 0:
        raise ValueError("stirling_second: arguments must be >= 0")
    if n == 0:
        return 1 if j == 0 else 0
    if j == 0:
        return 0
    if j > n:
        return 0
    # S(n, j) = j S(n-1, j) + S(n-1, j-1)
    return j * stirling_second(n - 1, j) + stirling_second(n - 1, j - 1)


@lru_cache(maxsize=None)
def s_upper(k: int, n: int) -> Fraction:
    """S^(k)(n) = sum_{m=k}^{n} C(n-1, m-1) * 2^m k!/m! * s(m, k).

    These are the coefficients of the expansion of (ln((1+z)/(1-z)))^k.
    """
    if not 1 <= k <= n:
        raise ValueError(f"s_upper: need 1 <= k <= n, got k={k}, n={n}")
    total = Fraction(0)
    for m in range(k, n + 1):
        total += (
            binomial(n - 1, m - 1)
            * Fraction(2**m * factorial(k), factorial(m))
            * stirling_first(m, k)
        )
    return total


def double_factorial(n: int) -> int:
    """n!! for odd n >= -1; (-1)!! = 1 (empty product)."""
    if n == -1:
        return 1
    if n < -1 or n % 2 == 0:
        raise ValueError(f"double_factorial: n must be odd or -1, got {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result
