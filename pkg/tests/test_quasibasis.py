import math

import numpy as np
import pytest

from pseudobosons import (
    BIORTHOGONAL_BASES_NOT_RIESZ,
    GaussPoly,
    GbtParams,
    NOT_PSEUDO_BOSONIC,
    QUASI_BASES_ONLY,
    RIESZ_LIKE_COLLAPSE,
    UNDETERMINED_CLOSED_FORM,
    DomainSpec,
    build_family,
    closed_form_series,
    domain_membership,
    domain_spec_for,
    partial_sums,
    verdict,
)


def test_domain_spec_validation():
    with pytest.raises(ValueError):
        DomainSpec(-0.1)
    with pytest.raises(ValueError):
        DomainSpec(1.0)
    DomainSpec(0.0)
    DomainSpec(0.999)


def test_domain_weight_from_params(case_d):
    spec = domain_spec_for(case_d)
    assert spec.weight_exponent == pytest.approx(1.0 / 6.0, abs=1e-14)


def test_domain_membership_is_strict(case_d):
    spec = domain_spec_for(case_d)
    assert domain_membership(GaussPoly((1.0,), 2.0), spec)
    assert domain_membership(GaussPoly((1.0,), 1.0), spec)
    # the boundary exponent itself is excluded
    assert not domain_membership(GaussPoly((1.0,), 1.0 / 6.0), spec)
    assert not domain_membership(GaussPoly((1.0,), 0.1), spec)


# ---------------------------------------------------------------------------
# partial sums of the resolution of the identity


def test_resolution_on_comfortable_pair(family_d_60):
    # f = e^{-x^2/2}, g = x^2 e^{-x^2/2}: well inside the domain, and
    # <f, g> = sqrt(pi)/2
    f = GaussPoly((1.0,), 1.0)
    g = GaussPoly((0.0, 0.0, 1.0), 1.0)
    target = math.sqrt(math.pi) / 2.0
    first = partial_sums(family_d_60, f, g, 60)
    swapped = partial_sums(family_d_60, f, g, 60, ordering="psi_first")
    assert first.target == pytest.approx(target, rel=1e-14)
    assert first.converged and swapped.converged
    assert first.final_error <= 1e-6   # measured 2.4e-9
    assert swapped.final_error <= 1e-6
    assert abs(first.partial_sums[-1] - swapped.partial_sums[-1]) <= 1e-8


def test_resolution_on_narrow_pair(family_d_60):
    # kappa = 2 sits further from the family exponents, so convergence is
    # visibly slower; by N = 60 the error is a few 1e-5
    f = GaussPoly((1.0,), 2.0)
    g = GaussPoly((0.0, 0.0, 1.0), 2.0)
    check = partial_sums(family_d_60, f, g, 60, tolerance=1e-4)
    assert check.target == pytest.approx(
        math.sqrt(math.pi) / (4.0 * math.sqrt(2.0)), rel=1e-14)
    assert check.converged
    assert check.final_error <= 1e-4  # measured 2.7e-5
    errors = [abs(s - check.target) for s in check.partial_sums]
    assert errors[-1] < errors[5]


def test_resolution_on_random_pairs(family_d_60):
    rng = np.random.default_rng(99)
    worst_err, worst_gap = 0.0, 0.0
    for _ in range(5):
        kf, kg = rng.uniform(0.3, 1.0, 2)
        f = GaussPoly(tuple(rng.standard_normal(4)), kf)
        g = GaussPoly(tuple(rng.standard_normal(4)), kg)
        a = partial_sums(family_d_60, f, g, 60)
        b = partial_sums(family_d_60, f, g, 60, ordering="psi_first")
        worst_err = max(worst_err, a.final_error, b.final_error)
        worst_gap = max(worst_gap,
                        abs(a.partial_sums[-1] - b.partial_sums[-1]))
    assert worst_err <= 1e-6  # measured 7.9e-10
    assert worst_gap <= 1e-8


def test_weak_pairing_with_callable(constrained_21):
    # f decays only algebraically, so it pairs weakly through quadrature;
    # target <f, g> = pi e^{1/2} erfc(1/sqrt(2))
    family = build_family(constrained_21, 80)

    def f(x):
        return 1.0 / (1.0 + x * x)

    g = GaussPoly((1.0,), 1.0)
    target = math.pi * math.exp(0.5) * math.erfc(1.0 / math.sqrt(2.0))
    check = partial_sums(family, f, g, 80, tolerance=1e-5)
    assert check.target == pytest.approx(target, rel=1e-10)
    assert check.converged
    assert check.final_error <= 1e-5  # measured 6.6e-10


def test_collapse_is_immediate_for_standard_bosons():
    family = build_family(GbtParams(0.0, 1.0, 1.0, 0.0), 10)
    f = family.phi[0]
    check = partial_sums(family, f, f, 10)
    # the n = 0 term already reproduces <f, f>; later terms vanish by parity
    # and orthogonality
    assert abs(check.partial_sums[0] - check.target) <= 1e-14
    assert check.final_error <= 1e-14


def test_partial_sums_argument_errors(family_d_60):
    f = GaussPoly((1.0,), 1.0)
    with pytest.raises(ValueError):
        partial_sums(family_d_60, f, f, 61)
    with pytest.raises(ValueError):
        partial_sums(family_d_60, f, f, 10, ordering="sideways")


# ---------------------------------------------------------------------------
# verdicts


def test_verdict_not_pseudo_bosonic(scenario_a, scenario_b, scenario_c):
    for params, scen in ((scenario_a, "A"), (scenario_b, "B"),
                         (scenario_c, "C")):
        v = verdict(params)
        assert v.kind == NOT_PSEUDO_BOSONIC
        assert f"SCENARIO_{scen}" in v.rationale_codes
    assert "PSI0_NOT_IN_L2" in verdict(scenario_a).rationale_codes
    assert "PHI0_NOT_IN_L2" in verdict(scenario_b).rationale_codes


def test_verdict_quasi_bases(case_d):
    v = verdict(case_d)
    assert v.kind == QUASI_BASES_ONLY
    assert "ANOMALY_NONZERO" in v.rationale_codes
    assert "DOMAIN_RESTRICTED" in v.rationale_codes


def test_verdict_bases_not_riesz(constrained_21, constrained_12):
    for params in (constrained_21, constrained_12):
        v = verdict(params)
        assert v.kind == BIORTHOGONAL_BASES_NOT_RIESZ
        assert "NORMS_UNBALANCED" in v.rationale_codes


def test_verdict_collapse(constrained_sqrt2):
    v = verdict(constrained_sqrt2)
    assert v.kind == RIESZ_LIKE_COLLAPSE
    assert "BOTH_NORMS_BOUNDED" in v.rationale_codes


def test_verdict_complex_family_uses_oracle(swanson_03):
    v = verdict(swanson_03, evidence_n_max=20)
    assert v.kind == UNDETERMINED_CLOSED_FORM
    assert "ORACLE_EVIDENCE_ONLY" in v.rationale_codes
    ev = v.evidence
    assert ev["source"] == "oracle"
    assert ev["phi_increasing_from_5"] and ev["psi_increasing_from_5"]
    assert len(ev["phi_log_norm_sq"]) == 21


def test_unbalanced_norms_rule_out_riesz(constrained_21):
    # a Riesz pair needs both families bounded away from 0 and infinity in
    # norm; here ||phi_n|| -> 0 while ||Psi_n|| -> infinity
    phi_series, psi_series = closed_form_series(constrained_21, 100)
    phi_log = [v.log_abs for v in phi_series.values]
    psi_log = [v.log_abs for v in psi_series.values]
    assert min(phi_log) < -40.0
    assert max(psi_log) > 40.0