import math

import pytest

from pseudobosons import (
    GaussPoly,
    NonDecayingIntegrandError,
    NonIntegrableError,
    QuadResult,
    QuadratureSpec,
    build_family,
    hermite_basis_function,
    inner_product,
    norm_sq_phi,
    quad_inner,
    quad_norm_series,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rule="simpson")
    with pytest.raises(ValueError):
        QuadratureSpec(node_count=8)
    spec = QuadratureSpec()
    assert spec.rule == "scaled_hermite_gauss"
    assert spec.node_count == 512


def test_oscillator_ground_state_norm():
    e0 = hermite_basis_function(0)
    res = quad_inner(e0, e0)
    assert isinstance(res, QuadResult)
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert res.error_estimate <= 1e-12


def test_halfline_gaussian_moment():
    # int_0^inf (2x)^2 e^{-x^2} dx = sqrt(pi)
    f = GaussPoly((0.0, 2.0), 1.0)
    res = quad_inner(f, f, halfline=True)
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-10)


def test_full_line_is_twice_halfline_for_even_integrand():
    f = GaussPoly((1.0, 0.0, -0.5), 0.8)
    whole = quad_inner(f, f)
    half = quad_inner(f, f, halfline=True)
    assert whole.value == pytest.approx(2.0 * half.value, rel=1e-12)


def test_zero_short_circuit():
    z = GaussPoly((), 1.0)
    res = quad_inner(z, GaussPoly((1.0,), 1.0))
    assert res.value == 0.0
    assert res.error_estimate == 0.0


def test_nonintegrable_pair_raises():
    f = GaussPoly((1.0,), 0.5 + 1.0j)
    g = GaussPoly((1.0,), -0.5 + 1.0j)
    with pytest.raises(NonIntegrableError):
        quad_inner(f, g)


def test_callable_pair_goes_adaptive():
    # a Gaussian passed as a plain function: same answer, adaptive route
    def f(x):
        return math.exp(-0.5 * x * x)

    res = quad_inner(f, f)
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-10)


def test_slowly_decaying_callable_rejected():
    def f(x):
        return 1.0 / (1.0 + x * x)

    with pytest.raises(NonDecayingIntegrandError, match="exceeds"):
        quad_inner(f, f)


def test_mixed_callable_gausspoly_pair():
    g = GaussPoly((1.0,), 1.0)

    def f(x):
        return x * x * math.exp(-0.5 * x * x)

    res = quad_inner(f, g)
    assert res.value == pytest.approx(inner_product(
        GaussPoly((0.0, 0.0, 1.0), 1.0), g), rel=1e-10)


def test_complex_kappa_pair_against_exact_path():
    f = GaussPoly((1.0, 2.0j, -0.5), 1.1 + 0.4j)
    g = GaussPoly((0.5, 0.0, 1.0 - 1.0j), 0.9 - 0.2j)
    exact = inner_product(f, g)
    res = quad_inner(f, g)
    assert res.value == pytest.approx(exact, rel=1e-11)


def test_error_estimate_is_small_for_smooth_pairs():
    f = GaussPoly((1.0, 0.3, 0.1), 1.0)
    res = quad_inner(f, f)
    assert 0.0 <= res.error_estimate <= 1e-10 * abs(res.value)


def test_norm_series_matches_closed_forms(case_d):
    family = build_family(case_d, 20)
    phi_series, psi_series = quad_norm_series(family)
    assert phi_series.source == "oracle"
    worst = 0.0
    for n in range(21):
        closed = norm_sq_phi(case_d, n).value()
        quad = phi_series.values[n].value()
        worst = max(worst, abs(quad - closed) / closed)
    assert worst <= 1e-8  # measured ~3e-14
    assert len(psi_series.values) == 21


def test_norm_series_beyond_build_rejected(case_d):
    family = build_family(case_d, 5)
    with pytest.raises(ValueError):
        quad_norm_series(family, n_max=6)