"""Truncated formal power series in z, over Fraction or Polynomial coefficients.

Used as the independent generating-function oracle for the Stirling-based
coefficient families and for Kravchuk polynomial generation.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import A, X, Polynomial, binom_poly


class TruncatedSeries:
    """Coefficients for z^0..z^order; arithmetic never reads beyond order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        zero = coeffs[0] * 0 if coeffs else Fraction(0)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @property
    def _zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def _match(self, other):
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._match(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        other = self._match(other)
        zero = self._zero
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        other = self._match(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise ZeroDivisionError("series division by zero constant term")
        out = []
        for n in range(self.order + 1):
            acc = self.coeffs[n]
            for i in range(1, n + 1):
                acc = acc - other.coeffs[i] * out[n - i]
            out.append(acc / b0)
        return TruncatedSeries(out, self.order)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative series power")
        result = TruncatedSeries.constant(self._zero + 1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_var(self, c) -> "TruncatedSeries":
        """Substitute z -> c*z."""
        return TruncatedSeries(
            [a * c**i for i, a in enumerate(self.coeffs)], self.order
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r})"


def zed(order: int) -> TruncatedSeries:
    """The series z."""
    return TruncatedSeries([Fraction(0), Fraction(1)], order)


def log1p(order: int) -> TruncatedSeries:
    """ln(1+z) truncated: sum_{i>=1} (-1)^(i+1) z^i / i."""
    coeffs = [Fraction(0)]
    for i in range(1, order + 1):
        coeffs.append(Fraction((-1) ** (i + 1), i))
    return TruncatedSeries(coeffs, order)


def exp_series(c, order: int) -> TruncatedSeries:
    """e^(c*z) truncated: sum c^i z^i / i!."""
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for i in range(1, order + 1):
        term = term * Fraction(c) / i
        coeffs.append(term)
    return TruncatedSeries(coeffs, order)


def compose(g: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """g(f(z)), truncated; f must have zero constant term."""
    if g.order != f.order:
        raise ValueError("series orders differ")
    if f.coeffs[0] != 0:
        raise ValueError("compose: inner series must have zero constant term")
    result = TruncatedSeries.constant(g.coeffs[g.order], g.order)
    for k in range(g.order - 1, -1, -1):
        result = result * f + g.coeffs[k]
    return result


def log_ratio(order: int) -> TruncatedSeries:
    """ln((1+z)/(1-z)) = ln(1+z) - ln(1-z), the S^(k) generating log."""
    return log1p(order) - log1p(order).scale_var(-1)


def kravchuk_genfun(N: int):
    """K_0..K_N as coefficients of (1+z)^a * ((1-z)/(1+z))^x.

    Expanded as the product of the three binomial series
    (1+z)^a, (1-z)^x and (1+z)^(-x), with Polynomial coefficients.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    a = Polynomial.var(A)
    x = Polynomial.var(X)
    one_plus_a = TruncatedSeries([binom_poly(a, i) for i in range(N + 1)], N)
    one_minus_x = TruncatedSeries(
        [binom_poly(x, i) * Fraction((-1) ** i) for i in range(N + 1)], N
    )
    one_plus_neg_x = TruncatedSeries([binom_poly(-x, i) for i in range(N + 1)], N)
    product = one_plus_a * one_minus_x * one_plus_neg_x
    return list(product.coeffs)
