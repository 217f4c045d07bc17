from fractions import Fraction

import pytest
from hypothesis import given, settings

from kravchuk_identities.derivations import (
    apply,
    apply_localized,
    cayley_k1,
    cayley_k2,
    dixmier_sigma,
    dk1_power_closed,
    dk2_power_closed,
    is_in_kernel,
    kravchuk1,
    kravchuk2,
    make_slice,
    power_apply,
    weitzenbock,
)
from kravchuk_identities.poly import LocalizedPolynomial, Polynomial, xvar

from conftest import polynomials

x0, x1, x2, x3, x4, x5 = (Polynomial.var(xvar(i)) for i in range(6))


def test_generator_image_tables():
    dk1 = kravchuk1(6)
    dk2 = kravchuk2(6)
    assert weitzenbock(3).images[0] == Polynomial.zero()
    assert dk1.images[3] == x0 / 3 + x2
    assert dk1.images[5] == x0 / 5 + x2 / 3 + x4
    assert dk2.images[2] == -x0 / 2 + x1
    assert dk2.images[4] == -x0 / 4 + x1 / 3 - x2 / 2 + x3


def test_apply_worked_kernel_element():
    dk1 = kravchuk1(2)
    assert apply(dk1, x1**2 - 2 * x2 * x0) == Polynomial.zero()


def test_apply_constant_and_weitzenbock():
    assert apply(kravchuk2(3), Polynomial.constant(5)) == Polynomial.zero()
    assert apply(weitzenbock(2), x0 * x2 - x1**2) == Polynomial.zero()


def test_apply_out_of_range():
    with pytest.raises(ValueError):
        apply(kravchuk1(2), x3)


def test_power_apply():
    dk1 = kravchuk1(4)
    p = x2 + x1
    assert power_apply(dk1, p, 0) == p
    assert power_apply(dk1, x2, 2) == x0
    for n in range(1, 11):
        D = kravchuk1(n)
        assert power_apply(D, Polynomial.var(xvar(n)), n + 1).is_zero


@given(polynomials(max_var=3, max_exp=2), polynomials(max_var=3, max_exp=2))
@settings(max_examples=25, deadline=None)
def test_leibniz_rule(p, q):
    for D in (weitzenbock(3), kravchuk1(3), kravchuk2(3)):
        assert apply(D, p * q) == apply(D, p) * q + p * apply(D, q)


def test_closed_forms_match_power_apply():
    for n in range(1, 13):
        dk1 = kravchuk1(n)
        dk2 = kravchuk2(n)
        xn = Polynomial.var(xvar(n))
        for k in range(1, n + 1):
            it1 = power_apply(dk1, xn, k)
            cf1 = dk1_power_closed(n, k)
            rebuilt1 = sum(
                (Polynomial.var(xvar(i)) * c for i, c in enumerate(cf1.coeffs)),
                Polynomial.zero(),
            )
            assert rebuilt1 == it1
            # calibration constant is the same for every n at fixed k
            assert cf1.scale == Fraction(1, 2**k)

            it2 = power_apply(dk2, xn, k)
            cf2 = dk2_power_closed(n, k)
            rebuilt2 = sum(
                (Polynomial.var(xvar(i)) * c for i, c in enumerate(cf2.coeffs)),
                Polynomial.zero(),
            )
            assert rebuilt2 == it2
            assert cf2.scale == 1


def test_closed_form_table_rows():
    assert dk1_power_closed(1, 1).coeffs == (Fraction(1),)
    assert dk1_power_closed(3, 1).coeffs == (Fraction(1, 3), Fraction(0), Fraction(1))
    assert dk2_power_closed(2, 1).coeffs == (Fraction(-1, 2), Fraction(1))
    assert dk2_power_closed(3, 1).coeffs == (
        Fraction(1, 3),
        Fraction(-1, 2),
        Fraction(1),
    )


def test_slice_validity():
    for D in (kravchuk1(4), kravchuk2(4)):
        slc = make_slice(D)
        assert slc.lam == LocalizedPolynomial(-x1, xvar(0), 1)
        assert apply_localized(D, slc.lam) == Polynomial.constant(-1)


def test_slice_rejects_bad_h():
    with pytest.raises(ValueError):
        make_slice(kravchuk1(3), x0)  # D(h) = 0
    with pytest.raises(ValueError):
        make_slice(kravchuk1(3), x3)  # D^2(h) != 0


def test_dixmier_sigma_basics():
    dk1 = kravchuk1(2)
    assert dixmier_sigma(dk1, 0) == LocalizedPolynomial(x0, xvar(0), 0)
    assert dixmier_sigma(dk1, 1).is_zero


def test_dixmier_sigma_k2_worked_image():
    dk2 = kravchuk2(2)
    sigma = dixmier_sigma(dk2, 2)
    expected = LocalizedPolynomial(
        (x1 * x0 - x1**2 + 2 * x2 * x0) / 2, xvar(0), 1
    )
    assert sigma == expected


def test_dixmier_images_killed_by_derivation():
    for build in (kravchuk1, kravchuk2):
        D = build(6)
        for i in range(7):
            sigma = dixmier_sigma(D, i)
            assert apply(D, sigma.numerator).is_zero


def test_cayley_k1_table():
    assert cayley_k1(2) == 2 * x2 * x0 - x1**2
    assert cayley_k1(3) == 3 * x3 * x0**2 - x1 * x0**2 - 3 * x1 * x0 * x2 + x1**3
    assert cayley_k1(4) == (
        8 * x4 * x0**3 - 8 * x1 * x0**2 * x3 + 4 * x1**2 * x0 * x2 - x1**4
    )


def test_cayley_k2_table():
    c2 = cayley_k2(2)
    assert c2.polynomial == x1 * x0 - x1**2 + 2 * x2 * x0
    assert c2.scale == Fraction(1, 2)
    c3 = cayley_k2(3)
    assert c3.polynomial == (
        x1 * x0**2 - x1**3 + 3 * x2 * x1 * x0 - 3 * x3 * x0**2
    )
    assert c3.scale == Fraction(-1, 3)
    c4 = cayley_k2(4)
    assert c4.polynomial == (
        2 * x1 * x0**3
        + x1**2 * x0**2
        - 2 * x1**3 * x0
        - x1**4
        + 4 * x2 * x1 * x0**2
        + 4 * x2 * x1**2 * x0
        - 8 * x3 * x1 * x0**2
        + 8 * x4 * x0**3
    )
    assert c4.scale == Fraction(1, 8)


def test_cayley_elements_in_kernel():
    for n in range(2, 13):
        assert is_in_kernel(kravchuk1(n), cayley_k1(n))
        assert is_in_kernel(kravchuk2(n), cayley_k2(n).polynomial)


def test_kernel_membership_examples():
    assert is_in_kernel(kravchuk1(2), cayley_k1(2))
    assert not is_in_kernel(kravchuk1(1), x1)
    # maps to zero under phi_K but is NOT a kernel element
    p = (
        x3 * x1**2
        - 2 * x2 * x3 * x0
        - x1 * x4 * x0
        - 3 * x3 * x0**2
        + 5 * x5 * x0**2
    )
    assert not is_in_kernel(kravchuk1(5), p)
    assert not is_in_kernel(kravchuk2(5), p)
