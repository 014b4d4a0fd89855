import math

import numpy as np
import pytest

from pseudobosons import (
    GaussPoly,
    GbtParams,
    NormalizationConvention,
    NotPseudoBosonicError,
    PseudoBosonError,
    adjoint,
    apply_ladder,
    biorthonormality_matrix,
    build_family,
    closed_form_phi,
    closed_form_psi,
    commutator_check,
    default_convention,
    ground_states,
    hermite_basis_function,
    inner_with_phi,
    inner_with_psi,
    ladder_operators,
    number_operator_check,
    swanson,
    symmetric_convention,
    verify_ladder,
)


def _coeff_gap(got, expected):
    # compare coefficient lists directly; the kappas of the two sides can
    # disagree by an ulp when they were computed along different float paths,
    # which would make GaussPoly.sub refuse the subtraction
    if abs(got.kappa - expected.kappa) > 1e-12 * (1.0 + abs(expected.kappa)):
        return math.inf
    n = max(len(got.coeffs), len(expected.coeffs))
    a = list(got.coeffs) + [0j] * (n - len(got.coeffs))
    b = list(expected.coeffs) + [0j] * (n - len(expected.coeffs))
    resid = max((abs(x - y) for x, y in zip(a, b)), default=0.0)
    return resid / (expected.max_abs_coeff() or 1.0)


# ---------------------------------------------------------------------------
# conventions and ground states


def test_default_convention_product(case_d):
    conv = default_convention(case_d)
    assert conv.n_phi == 1.0
    target = (math.pi * 35.0 / 6.0) ** -0.5
    assert conv.n_psi == pytest.approx(target, rel=1e-14)


def test_symmetric_convention(constrained_21):
    conv = symmetric_convention(constrained_21)
    # P = (alpha+gamma)(beta+delta) = 1 * 3
    want = (3.0 * math.pi) ** -0.25
    assert conv.n_phi == pytest.approx(want, rel=1e-14)
    assert conv.n_psi == conv.n_phi


def test_symmetric_convention_gated(swanson_03):
    with pytest.raises(PseudoBosonError):
        symmetric_convention(swanson_03)
    # standard bosons fail the strict ordering too (delta = 0)
    with pytest.raises(PseudoBosonError):
        symmetric_convention(GbtParams(0.0, 1.0, 1.0, 0.0))


def test_bad_convention_rejected(case_d):
    with pytest.raises(PseudoBosonError):
        ground_states(case_d, NormalizationConvention(1.0, 1.0))


def test_ground_states_case_d(case_d):
    phi0, psi0 = ground_states(case_d)
    assert phi0.kappa == pytest.approx(1.0 / 7.0)
    assert psi0.kappa == pytest.approx(1.0 / 5.0)
    assert phi0.coeffs == (1.0 + 0.0j,)
    # biorthonormality of the pair under the chosen convention
    from pseudobosons import inner_product

    assert inner_product(phi0, psi0) == pytest.approx(1.0, rel=1e-12)


def test_ground_states_refuse_scenario_a(scenario_a):
    with pytest.raises(NotPseudoBosonicError) as err:
        ground_states(scenario_a)
    assert err.value.scenario == "A"
    assert err.value.failing == ("Psi_0",)


def test_ground_states_refuse_scenario_c(scenario_c):
    with pytest.raises(NotPseudoBosonicError) as err:
        ground_states(scenario_c)
    assert err.value.failing == ("phi_0", "Psi_0")


def test_build_family_bounds(case_d):
    with pytest.raises(ValueError):
        build_family(case_d, -1)
    with pytest.raises(ValueError):
        build_family(case_d, 201)


# ---------------------------------------------------------------------------
# ladder operators


def test_ladder_operator_coefficients(case_d):
    ops = ladder_operators(case_d)
    s = math.sqrt(2.0)
    assert ops.a.x_coeff == pytest.approx((2.0 - 1.5) / s)
    assert ops.a.d_coeff == pytest.approx((2.0 + 1.5) / s)
    assert ops.b.x_coeff == pytest.approx((1.0 - 2.0 / 3.0) / s)
    assert ops.b.d_coeff == pytest.approx(-(1.0 + 2.0 / 3.0) / s)
    # the dagger entries follow the formal-adjoint map
    assert ops.a_dagger.x_coeff == adjoint(ops.a).x_coeff
    assert ops.a_dagger.d_coeff == adjoint(ops.a).d_coeff
    assert ops.b_dagger.d_coeff == adjoint(ops.b).d_coeff


def test_commutator_is_one(case_d, swanson_03):
    f = GaussPoly((0.4, 1.0, -0.3), 1.0)
    for params in (case_d, swanson_03):
        ops = ladder_operators(params)
        assert commutator_check(ops.a, ops.b, f) == pytest.approx(1.0)


def test_annihilation_of_ground_states(case_d):
    ops = ladder_operators(case_d)
    phi0, psi0 = ground_states(case_d)
    assert apply_ladder(ops.a, phi0).is_zero
    assert apply_ladder(ops.b_dagger, psi0).is_zero


# ---------------------------------------------------------------------------
# family construction vs closed forms


def test_family_matches_closed_forms_case_d(family_d_60, case_d):
    worst = 0.0
    for n in range(51):
        worst = max(worst, _coeff_gap(family_d_60.phi[n],
                                      closed_form_phi(case_d, n)))
        worst = max(worst, _coeff_gap(family_d_60.psi[n],
                                      closed_form_psi(case_d, n)))
    assert worst <= 1e-10  # measured ~8.5e-15


def test_family_matches_closed_forms_constrained(constrained_21):
    family = build_family(constrained_21, 50)
    worst = 0.0
    for n in range(51):
        worst = max(worst, _coeff_gap(family.phi[n],
                                      closed_form_phi(constrained_21, n)))
        worst = max(worst, _coeff_gap(family.psi[n],
                                      closed_form_psi(constrained_21, n)))
    assert worst <= 1e-10


def test_family_matches_closed_forms_swanson(family_sw_40, swanson_03):
    worst = 0.0
    for n in range(41):
        worst = max(worst, _coeff_gap(family_sw_40.phi[n],
                                      closed_form_phi(swanson_03, n)))
        worst = max(worst, _coeff_gap(family_sw_40.psi[n],
                                      closed_form_psi(swanson_03, n)))
    assert worst <= 1e-10


def test_closed_form_n0_is_ground_state(case_d):
    phi0, psi0 = ground_states(case_d)
    assert closed_form_phi(case_d, 0).coeffs == phi0.coeffs
    assert closed_form_psi(case_d, 0).kappa == psi0.kappa


def test_standard_bosons_reduce_to_oscillator():
    family = build_family(GbtParams(0.0, 1.0, 1.0, 0.0), 10)
    # with N_phi = 1 the phi members are pi^{1/4} times the unit oscillator
    # functions, and the Psi members are pi^{-1/4} times them
    quarter = math.pi ** 0.25
    for n in (0, 3, 7, 10):
        e_n = hermite_basis_function(n)
        assert _coeff_gap(family.phi[n], e_n.scale(quarter)) <= 1e-12
        assert _coeff_gap(family.psi[n], e_n.scale(1.0 / quarter)) <= 1e-12


# ---------------------------------------------------------------------------
# ladder and number-operator residuals


def test_verify_ladder_case_d(family_d_60):
    report = verify_ladder(family_d_60)
    assert set(report.by_relation) == {
        "lower_phi", "raise_phi", "lower_psi", "raise_psi"}
    assert report.max_residual <= 1e-10  # measured 1.4e-14


def test_verify_ladder_swanson(family_sw_40):
    assert verify_ladder(family_sw_40).max_residual <= 1e-10


def test_number_operator_case_d(family_d_60):
    report = number_operator_check(family_d_60)
    assert report.max_residual <= 1e-10
    # alpha*beta != gamma*delta here, so N is not symmetric and the
    # signature is not reported
    assert report.symmetry_residual is None


def test_number_operator_constrained_symmetry(constrained_21):
    family = build_family(constrained_21, 30)
    report = number_operator_check(family)
    assert report.max_residual <= 1e-10
    assert report.symmetry_residual is not None
    assert report.symmetry_residual <= 1e-10  # measured ~1e-13


def test_number_operator_swanson_no_symmetry(family_sw_40):
    report = number_operator_check(family_sw_40)
    assert report.max_residual <= 1e-10
    assert report.symmetry_residual is None


# ---------------------------------------------------------------------------
# biorthonormality


def test_gram_case_d(family_d_60):
    g = biorthonormality_matrix(family_d_60, n_max=30)
    assert g.shape == (31, 31)
    assert np.max(np.abs(g - np.eye(31))) <= 1e-10  # measured 1.6e-14


def test_gram_constrained(constrained_12):
    family = build_family(constrained_12, 30)
    g = biorthonormality_matrix(family)
    assert np.max(np.abs(g - np.eye(31))) <= 1e-10


def test_gram_swanson(family_sw_40):
    g = biorthonormality_matrix(family_sw_40, n_max=30)
    assert np.max(np.abs(g - np.eye(31))) <= 1e-9  # measured 1.7e-14


def test_gram_beyond_build_rejected(family_sw_40):
    with pytest.raises(ValueError):
        biorthonormality_matrix(family_sw_40, n_max=41)


def test_inner_with_family_members(family_d_60):
    assert inner_with_psi(
        family_d_60, family_d_60.phi[0], 0) == pytest.approx(1.0)
    assert inner_with_phi(
        family_d_60, family_d_60.psi[0], 0) == pytest.approx(1.0)
    # cross terms vanish by parity exactly on the rational path
    assert inner_with_psi(family_d_60, family_d_60.phi[0], 1) == 0.0


# ---------------------------------------------------------------------------
# proportionality between the two families


def test_constrained_proportionality(constrained_21):
    # psi_n = u^n (N_psi / N_phi) phi_n with u = beta^2 - delta^2 = 3
    family = build_family(constrained_21, 40)
    conv = family.convention
    worst = 0.0
    for n in range(41):
        expected = family.phi[n].scale(3.0 ** n * conv.n_psi / conv.n_phi)
        worst = max(worst, _coeff_gap(family.psi[n], expected))
    assert worst <= 1e-10  # measured 4.3e-16


def test_swanson_reflection_proportionality(family_sw_40, swanson_03):
    # Psi_n at theta is proportional to phi_n at -theta; the reflection is
    # implemented by negating alpha and delta, which is exact in floats
    reflected = GbtParams(alpha=-swanson_03.alpha, beta=swanson_03.beta,
                          gamma=swanson_03.gamma, delta=-swanson_03.delta)
    ratio = family_sw_40.convention.n_psi / family_sw_40.convention.n_phi
    worst = 0.0
    for n in range(41):
        expected = closed_form_phi(
            reflected, n, default_convention(reflected)).scale(ratio)
        worst = max(worst, _coeff_gap(family_sw_40.psi[n], expected))
    assert worst <= 1e-10  # measured 1.1e-15