from fractions import Fraction

from hypothesis import strategies as st

from kravchuk_identities.poly import Polynomial, xvar

small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
).filter(lambda f: f != 0)


@st.composite
def polynomials(draw, max_var=3, max_exp=3, max_terms=4):
    """Small random polynomials in x0..x{max_var}."""
    n_terms = draw(st.integers(0, max_terms))
    p = Polynomial.zero()
    for _ in range(n_terms):
        c = draw(small_fractions)
        term = Polynomial.constant(c)
        for v in range(max_var + 1):
            e = draw(st.integers(0, max_exp))
            if e:
                term = term * Polynomial.var(xvar(v)) ** e
        p = p + term
    return p


def frac(n, d=1):
    return Fraction(n, d)
