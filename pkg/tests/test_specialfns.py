"""Hermite and Legendre evaluation, Gaussian moments, oscillator basis."""

import math

import numpy as np
import pytest

from pseudobosons import (
    GaussPoly,
    LogMagnitude,
    NonIntegrableError,
    gaussian_moment,
    hermite_basis_function,
    hermite_coeffs,
    hermite_value,
    inner_product,
    legendre_asymptotic,
    legendre_eval,
    quad_inner,
)
from pseudobosons.specialfns import MAX_HERMITE_N, hermite_value_exact


def test_first_hermite_coefficients():
    assert np.allclose(hermite_coeffs(0), [1])
    assert np.allclose(hermite_coeffs(1), [0, 2])
    assert np.allclose(hermite_coeffs(2), [-2, 0, 4])
    assert np.allclose(hermite_coeffs(3), [0, -12, 0, 8])


def test_hermite_degree_bounds():
    with pytest.raises(ValueError):
        hermite_coeffs(-1)
    with pytest.raises(ValueError):
        hermite_coeffs(MAX_HERMITE_N + 1)
    with pytest.raises(ValueError):
        hermite_value(-2, 0.5)
    # the cap itself is allowed; coefficients beyond float range saturate
    top = hermite_coeffs(MAX_HERMITE_N)
    assert top.shape == (MAX_HERMITE_N + 1,)
    assert np.any(np.isinf(top.real))
    assert np.all(np.isfinite(hermite_coeffs(200)))


def test_exact_coefficient_content_matches_value_recurrence():
    # Monomial evaluation from the rounded float arrays is hopeless at high
    # degree (relative error ~1e-5 at n=50, astronomic at n=200, |x|=5), so
    # the coefficient-vs-recurrence invariant is checked against the exact
    # integer content the arrays are rounded from.
    worst = 0.0
    for n in list(range(30)) + list(range(30, 201, 10)):
        for x in (-5.0, -1.7, 0.3, 2.0, 5.0):
            ref = hermite_value(n, x)
            if ref == 0.0:
                continue
            worst = max(worst, abs(hermite_value_exact(n, x) - ref) / abs(ref))
    assert worst <= 1e-10  # measured 8.6e-15


def test_float_coefficient_arrays_good_to_moderate_degree():
    # the float arrays only stay faithful while the integer coefficients fit
    # in 53 bits; past n~25 cancellation at |x|~5 takes over (2.6e-9 by n=30)
    xs = np.linspace(-5.0, 5.0, 41)
    worst = 0.0
    for n in range(26):
        vals = np.polynomial.polynomial.polyval(xs, hermite_coeffs(n)).real
        refs = np.array([hermite_value(n, float(x)) for x in xs])
        mask = refs != 0.0
        worst = max(worst, float(np.max(
            np.abs(vals[mask] - refs[mask]) / np.abs(refs[mask]))))
    assert worst <= 1e-10  # measured 1.9e-11


def test_legendre_small_degree_values():
    # P_2(x) = (3x^2 - 1)/2; at x = 6/sqrt(35) that is 73/70
    got = legendre_eval(2, 6.0 / math.sqrt(35.0)).value().real
    assert math.isclose(got, 73.0 / 70.0, rel_tol=1e-13)
    got = legendre_eval(3, 1.1).value().real
    assert math.isclose(got, (5 * 1.1 ** 3 - 3 * 1.1) / 2, rel_tol=1e-13)


def test_legendre_domain_and_clamp():
    with pytest.raises(ValueError):
        legendre_eval(4, 0.5)
    with pytest.raises(ValueError):
        legendre_eval(-1, 1.5)
    # arguments within 1e-12 below 1 clamp to the endpoint where P_n = 1
    assert legendre_eval(37, 1.0 - 1e-13).log_abs == 0.0
    assert legendre_eval(0, 5.0).log_abs == 0.0


def test_legendre_high_degree_stays_finite_and_positive():
    # n=500 at x=3 overflows doubles without the internal rescaling
    lm = legendre_eval(500, 3.0)
    assert lm.sign_or_phase == 1.0
    assert math.isfinite(lm.log_abs)
    # crude bracket from (x + sqrt(x^2-1))^n against the n+1/2 power
    base = math.log(3.0 + math.sqrt(8.0))
    assert 490 * base < lm.log_abs < 502 * base


def test_legendre_asymptotic_error_small_and_decreasing():
    for x in (1.01418510567422, 1.1, 2.0):
        errs = []
        for n in (100, 200, 400):
            rel = abs(math.exp(legendre_asymptotic(n, x).log_abs
                               - legendre_eval(n, x).log_abs) - 1.0)
            errs.append(rel)
        assert errs[0] <= 1e-2
        assert errs[0] > errs[1] > errs[2]


def test_legendre_asymptotic_domain():
    with pytest.raises(ValueError):
        legendre_asymptotic(0, 1.5)
    with pytest.raises(ValueError):
        legendre_asymptotic(10, 1.0)


def test_gaussian_moment_reference_values():
    assert math.isclose(gaussian_moment(0, 1.0).real, math.sqrt(math.pi),
                        rel_tol=1e-14)
    assert math.isclose(gaussian_moment(2, 1.0).real,
                        0.5 * math.sqrt(math.pi), rel_tol=1e-14)
    # Gamma((m+1)/2) sigma^{-(m+1)/2} at m=4, sigma=1/7
    assert math.isclose(gaussian_moment(4, 1.0 / 7.0).real,
                        0.75 * math.sqrt(math.pi) * 7.0 ** 2.5, rel_tol=1e-13)
    assert gaussian_moment(7, 2.3) == 0.0


def test_gaussian_moment_rejects_nonintegrable():
    with pytest.raises(NonIntegrableError):
        gaussian_moment(2, -1.0)
    with pytest.raises(NonIntegrableError):
        gaussian_moment(0, 1j)
    with pytest.raises(ValueError):
        gaussian_moment(-2, 1.0)


@pytest.mark.parametrize("sigma", [1.0, 1.0 / 7.0, 2.0 + 1.0j])
def test_gaussian_moment_against_quadrature(sigma):
    sigma = complex(sigma)
    worst = 0.0
    for m in range(0, 41, 2):
        f = GaussPoly(tuple([0.0] * m + [1.0]), sigma.conjugate())
        g = GaussPoly((1.0,), sigma)
        got = quad_inner(f, g).value
        want = gaussian_moment(m, sigma)
        worst = max(worst, abs(got - want) / abs(want))
    assert worst <= 1e-10


def test_log_magnitude_roundtrip():
    lm = LogMagnitude.from_value(-2.5)
    assert lm.value() == pytest.approx(-2.5, rel=1e-15)
    assert LogMagnitude.from_value(0.0).is_zero
    assert (lm * LogMagnitude.zero()).is_zero
    prod = LogMagnitude.from_value(3.0) * LogMagnitude.from_value(1j)
    assert prod.value() == pytest.approx(3j)


def test_oscillator_basis_single_entries():
    e0 = hermite_basis_function(0)
    assert e0.coeffs == (math.pi ** -0.25,)
    assert e0.kappa == 1.0
    assert abs(inner_product(hermite_basis_function(3),
                             hermite_basis_function(3)) - 1.0) <= 1e-12
    assert abs(inner_product(hermite_basis_function(2),
                             hermite_basis_function(4))) <= 1e-12


def test_oscillator_basis_is_orthonormal():
    # The float monomial representation of e_n is itself the accuracy limit:
    # unit functions have exponentially large monomial coefficients, so the
    # per-coefficient rounding of ~1e-16 amplifies with degree. Measured
    # envelope: 3.6e-13 at n,m <= 20, 2.6e-11 at n,m <= 30.
    es = [hermite_basis_function(n) for n in range(31)]
    worst20 = 0.0
    worst30 = 0.0
    for i in range(31):
        for j in range(i, 31):
            got = inner_product(es[i], es[j])
            dev = abs(got - (1.0 if i == j else 0.0))
            if max(i, j) <= 20:
                worst20 = max(worst20, dev)
            worst30 = max(worst30, dev)
    assert worst20 <= 1e-12
    assert worst30 <= 1e-10
