"""Triangular derivations of Q[x0..xN]: the basic Weitzenbock derivation and
the two Kravchuk derivations, with iterated powers, closed-form power
coefficients, the Dixmier map and the Cayley kernel elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import arith
from .poly import LocalizedPolynomial, Polynomial, var_name, xvar


@dataclass(frozen=True)
class Derivation:
    """Images[i] = D(x_i); triangular (D(x_i) uses only x_j, j < i)."""

    name: str
    images: tuple

    @property
    def max_index(self) -> int:
        return len(self.images) - 1


def build(kind: str, N: int) -> Derivation:
    """The three named derivations on Q[x0..xN]."""
    if N < 1:
        raise ValueError(f"build: N must be >= 1, got {N}")
    images = [Polynomial.zero()]
    if kind == "weitzenbock":
        for n in range(1, N + 1):
            images.append(Polynomial.var(xvar(n - 1)) * n)
    elif kind == "kravchuk1":
        # D(x_n) = sum_{i=1}^n (1-(-1)^i)/(2i) x_{n-i}  (odd i only)
        for n in range(1, N + 1):
            img = Polynomial.zero()
            for i in range(1, n + 1, 2):
                img = img + Polynomial.var(xvar(n - i)) * Fraction(1, i)
            images.append(img)
    elif kind == "kravchuk2":
        # D(x_n) = sum_{i=0}^{n-1} (-1)^(n+1+i)/(n-i) x_i
        for n in range(1, N + 1):
            img = Polynomial.zero()
            for i in range(n):
                img = img + Polynomial.var(xvar(i)) * Fraction(
                    (-1) ** (n + 1 + i), n - i
                )
            images.append(img)
    else:
        raise ValueError(f"unknown derivation kind: {kind!r}")
    return Derivation(kind, tuple(images))


@lru_cache(maxsize=None)
def _cached(kind: str, N: int) -> Derivation:
    return build(kind, N)


def weitzenbock(N: int) -> Derivation:
    return _cached("weitzenbock", N)


def kravchuk1(N: int) -> Derivation:
    return _cached("kravchuk1", N)


def kravchuk2(N: int) -> Derivation:
    return _cached("kravchuk2", N)


def apply(D: Derivation, p: Polynomial) -> Polynomial:
    """Leibniz extension of the generator images to any polynomial."""
    for v in p.variables():
        if v > D.max_index:
            raise ValueError(
                f"variable {var_name(v)} out of range for {D.name} on x0..x{D.max_index}"
            )
    total = Polynomial.zero()
    for mono, c in p.terms():
        for v, e in mono:
            image = D.images[v]
            if image.is_zero:
                continue
            # c * e * v^(e-1) * (other factors) * D(v)
            rest = dict(mono)
            if e == 1:
                del rest[v]
            else:
                rest[v] = e - 1
            cof = Polynomial({tuple(sorted(rest.items())): c * e})
            total = total + cof * image
    return total


def power_apply(D: Derivation, p: Polynomial, k: int) -> Polynomial:
    """k-fold application of D; D^0 is the identity."""
    if k < 0:
        raise ValueError("k must be >= 0")
    for _ in range(k):
        if p.is_zero:
            break
        p = apply(D, p)
    return p


def is_in_kernel(D: Derivation, p: Polynomial) -> bool:
    return apply(D, p).is_zero


@dataclass(frozen=True)
class ClosedForm:
    """Coefficients of x_0..x_{n-k} in D^k(x_n), plus the calibration
    constant relating the printed closed-form coefficients to the true
    powers (1 where the closed form needs no correction)."""

    coeffs: tuple
    scale: Fraction


@lru_cache(maxsize=None)
def _dk1_calibration(k: int) -> Fraction:
    """Constant c with D_K1^k(x_k) = c * S^(k)(k) * x_0."""
    D = kravchuk1(k if k > 1 else 1)
    oracle = power_apply(D, Polynomial.var(xvar(k)), k)
    observed = oracle.coeff(((xvar(0), 1),))
    return observed / arith.s_upper(k, k)


def dk1_power_closed(n: int, k: int) -> ClosedForm:
    """D_K1^k(x_n) = scale * sum_i x_i S^(k)(n-i); scale calibrated once
    at (n, k) = (k, k) against iterated application."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    scale = _dk1_calibration(k)
    coeffs = tuple(
        scale * (arith.s_upper(k, n - i) if n - i >= k else Fraction(0))
        for i in range(n - k + 1)
    )
    return ClosedForm(coeffs, scale)


def dk2_power_closed(n: int, k: int) -> ClosedForm:
    """D_K2^k(x_n) = sum_i x_i * k!/(n-i)! * s(n-i, k)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    coeffs = tuple(
        Fraction(factorial(k), factorial(n - i)) * arith.stirling_first(n - i, k)
        for i in range(n - k + 1)
    )
    return ClosedForm(coeffs, Fraction(1))


@dataclass(frozen=True)
class Slice:
    """h with D(h) != 0, D^2(h) = 0, and lambda = -h/D(h), D(lambda) = -1."""

    h: Polynomial
    lam: LocalizedPolynomial


def make_slice(D: Derivation, h: Polynomial = None) -> Slice:
    """Slice from h (default x_1, giving lambda = -x_1/x_0)."""
    if h is None:
        h = Polynomial.var(xvar(1))
    dh = apply(D, h)
    if dh.is_zero:
        raise ValueError("invalid slice: D(h) = 0")
    if not apply(D, dh).is_zero:
        raise ValueError("invalid slice: D^2(h) != 0")
    # D(h) must be c * x0^m so that lambda lives in the ring localized at x0.
    terms = list(dh.terms())
    if len(terms) != 1:
        raise ValueError("slice denominator is not a monomial in the pivot")
    mono, c = terms[0]
    pivot = xvar(0)
    if mono and (len(mono) > 1 or mono[0][0] != pivot):
        raise ValueError("slice denominator is not a power of x0")
    power = mono[0][1] if mono else 0
    lam = LocalizedPolynomial(-h / c, pivot, power)
    return Slice(h, lam)


def apply_localized(D: Derivation, L: LocalizedPolynomial) -> LocalizedPolynomial:
    """Extension of D to the ring localized at the pivot; requires the pivot
    to be a kernel generator (quotient rule collapses)."""
    if not D.images[L.pivot].is_zero:
        raise ValueError("pivot must be in the kernel of D")
    return LocalizedPolynomial(apply(D, L.numerator), L.pivot, L.pivot_power)


def dixmier_sigma(D: Derivation, i: int, slc: Slice = None) -> LocalizedPolynomial:
    """sigma(x_i) = sum_k D^k(x_i) lambda^k / k!, a kernel element of the
    localized ring."""
    if slc is None:
        slc = make_slice(D)
    if apply_localized(D, slc.lam) != Polynomial.constant(-1):
        raise ValueError("invalid slice: D(lambda) != -1")
    pivot = slc.lam.pivot
    total = LocalizedPolynomial(Polynomial.zero(), pivot, 0)
    term_poly = Polynomial.var(xvar(i))
    lam_pow = LocalizedPolynomial(Polynomial.one(), pivot, 0)
    k = 0
    while not term_poly.is_zero:
        total = total + lam_pow * (term_poly / factorial(k))
        term_poly = apply(D, term_poly)
        lam_pow = lam_pow * slc.lam
        k += 1
    return total


def cayley_k1(n: int) -> Polynomial:
    """C_n = n (n-2)! x_0^(n-1) sigma(x_n) for the first Kravchuk derivation."""
    if n < 2:
        raise ValueError(f"cayley_k1: n must be >= 2, got {n}")
    D = kravchuk1(n)
    sigma = dixmier_sigma(D, n)
    if sigma.pivot_power > n - 1:
        raise ValueError("sigma denominator exceeds x0^(n-1)")
    cleared = sigma.numerator * Polynomial.var(xvar(0)) ** (n - 1 - sigma.pivot_power)
    return cleared * (n * factorial(n - 2))


@dataclass(frozen=True)
class CayleyK2:
    """Primitive integer numerator of sigma(x_n) for D_K2, with the rational
    scale it was divided by: sigma(x_n) * x_0^power = scale * polynomial."""

    polynomial: Polynomial
    scale: Fraction
    power: int


def cayley_k2(n: int) -> CayleyK2:
    if n < 2:
        raise ValueError(f"cayley_k2: n must be >= 2, got {n}")
    D = kravchuk2(n)
    sigma = dixmier_sigma(D, n)
    num, power = sigma.numerator, sigma.pivot_power
    coeffs = [c for _, c in num.terms()]
    content = Fraction(
        gcd(*(c.numerator for c in coeffs)),
        _lcm_all(c.denominator for c in coeffs),
    )
    primitive = num / content
    # Sign convention per the published sigma tables: the x_1 * x_0^power
    # coefficient of the primitive part is positive.
    if power > 0:
        anchor_mono = ((xvar(0), power), (xvar(1), 1))
    else:
        anchor_mono = ((xvar(1), 1),)
    anchor = primitive.coeff(anchor_mono)
    if anchor == 0:
        anchor = next(iter(c for _, c in primitive.terms()))
    if anchor < 0:
        primitive, content = -primitive, -content
    return CayleyK2(primitive, content, power)


def _lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
