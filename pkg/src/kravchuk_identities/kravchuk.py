"""Kravchuk polynomials K_n(x, a) and their derivative expansions."""

from fractions import Fraction
from functools import lru_cache

from .poly import A, X, Polynomial, binom_poly


@lru_cache(maxsize=None)
def kravchuk(n: int) -> Polynomial:
    """K_n(x,a) = sum_{i=0}^n (-1)^i C(x,i) C(a-x, n-i), expanded."""
    if n < 0:
        raise ValueError(f"kravchuk: n must be >= 0, got {n}")
    x = Polynomial.var(X)
    a_minus_x = Polynomial.var(A) - x
    total = Polynomial.zero()
    for i in range(n + 1):
        term = binom_poly(x, i) * binom_poly(a_minus_x, n - i)
        total = total + term if i % 2 == 0 else total - term
    return total


def dKdx_expansion(n: int) -> Polynomial:
    """d/dx K_n as the combination -2 sum_{i=1}^n (1-(-1)^i)/(2i) K_{n-i}."""
    if n < 1:
        raise ValueError(f"dKdx_expansion: n must be >= 1, got {n}")
    total = Polynomial.zero()
    for i in range(1, n + 1):
        c = Fraction(1 - (-1) ** i, 2 * i)
        if c:
            total = total + kravchuk(n - i) * (-2 * c)
    return total


def dKda_expansion(n: int) -> Polynomial:
    """d/da K_n as the combination sum_{i=0}^{n-1} (-1)^(n+1+i)/(n-i) K_i."""
    if n < 1:
        raise ValueError(f"dKda_expansion: n must be >= 1, got {n}")
    total = Polynomial.zero()
    for i in range(n):
        total = total + kravchuk(i) * Fraction((-1) ** (n + 1 + i), n - i)
    return total
