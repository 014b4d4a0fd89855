"""Construction and verification of the biorthogonal eigenfamilies.

phi_n = b^n phi_0 / sqrt(n!) and Psi_n = (a+)^n Psi_0 / sqrt(n!) are built
iteratively; the closed Hermite-Gaussian forms are verified against that
construction, not the other way around. Internally each family member is
phi_n = N * (2^n n!)^{-1/2} * Q_n(x) * exp(-kappa x^2/2) with Q_n produced by
a sqrt(2)-free ladder step carried in exact rational arithmetic: the float
coefficient arrays are materialized from the exact ones, and precision-critical
pairings (the Gram matrix, partial sums downstream) consume the exact
coefficients directly. Double precision alone loses the biorthonormality
identity by n~30; the exact path holds it at the 1e-14 level.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NotPseudoBosonicError, PseudoBosonError
from .gausspoly import (
    GaussPoly,
    LadderOperator,
    adjoint,
    apply_ladder,
    inner_product,
    _cadd,
    _cconj,
    _cfrac,
    _cinv,
    _cmul,
    _cneg,
    _cscale,
    _exact_inner,
    _to_complex,
    _F0,
    _F1,
)
from .gbt import GbtParams, normalizability, validate
from .specialfns import _hermite_exact

N_MAX_CAP = 200
_SQRT2 = math.sqrt(2.0)

__all__ = [
    "NormalizationConvention",
    "EigenFamily",
    "Ladders",
    "default_convention",
    "symmetric_convention",
    "ladder_operators",
    "ground_states",
    "build_family",
    "closed_form_phi",
    "closed_form_psi",
    "verify_ladder",
    "number_operator_check",
    "biorthonormality_matrix",
]


@dataclass(frozen=True)
class NormalizationConvention:
    """The pair (N_phi, N_Psi); only the product is fixed by biorthonormality.

    <phi_0, Psi_0> = 1 under the conjugate-linear-in-first-argument pairing
    pins conj(n_phi) * n_psi = conj((pi (alpha+gamma)(beta+delta))^{-1/2})
    (principal branch). For real ordered parameters the conjugation is
    invisible; for complex families it is what keeps the Gram matrix equal to
    the identity.
    """

    n_phi: complex
    n_psi: complex


def default_convention(params: GbtParams) -> NormalizationConvention:
    """N_phi = 1; N_Psi carries the whole product."""
    p = params.p_product
    root = cmath.exp(-0.5 * cmath.log(math.pi * p))
    return NormalizationConvention(n_phi=1.0, n_psi=root.conjugate())


def symmetric_convention(params: GbtParams) -> NormalizationConvention:
    """N_phi = N_Psi = (pi (alpha+gamma)(beta+delta))^{-1/4}; real ordered only."""
    if not params.is_real_ordered:
        raise PseudoBosonError(
            "symmetric convention is defined for real ordered parameters only"
        )
    root = (math.pi * params.p_product.real) ** (-0.25)
    return NormalizationConvention(n_phi=root, n_psi=root)


def _check_convention(params: GbtParams,
                      convention: NormalizationConvention) -> None:
    p = params.p_product
    target = cmath.exp(-0.5 * cmath.log(math.pi * p)).conjugate()
    got = convention.n_phi.conjugate() * convention.n_psi
    if abs(got - target) > 1e-12 * abs(target):
        raise PseudoBosonError(
            f"normalization product {got} differs from required {target}"
        )


@dataclass(frozen=True)
class Ladders:
    a: LadderOperator
    b: LadderOperator
    a_dagger: LadderOperator
    b_dagger: LadderOperator


def ladder_operators(params: GbtParams) -> Ladders:
    """Position-space realization of a, b and their formal adjoints.

    a = [(beta-delta) x + (beta+delta) d/dx] / sqrt(2),
    b = [(gamma-alpha) x - (gamma+alpha) d/dx] / sqrt(2);
    with det = 1 these satisfy [a, b] = 1.
    """
    a = LadderOperator((params.beta - params.delta) / _SQRT2,
                       (params.beta + params.delta) / _SQRT2)
    b = LadderOperator((params.gamma - params.alpha) / _SQRT2,
                       -(params.gamma + params.alpha) / _SQRT2)
    return Ladders(a=a, b=b, a_dagger=adjoint(a), b_dagger=adjoint(b))


def ground_states(params: GbtParams,
                  convention: NormalizationConvention | None = None
                  ) -> tuple[GaussPoly, GaussPoly]:
    """phi_0 = N_phi e^{-kappa_phi x^2/2} and Psi_0 = N_Psi e^{-kappa_psi x^2/2}.

    Requires scenario D (both exponents with strictly positive real part);
    otherwise the failing ground state(s) are named in the error.
    """
    validate(params)
    rep = normalizability(params)
    if rep.scenario != "D":
        failing = []
        if not rep.phi0_in_H:
            failing.append("phi_0")
        if not rep.psi0_in_H:
            failing.append("Psi_0")
        raise NotPseudoBosonicError(rep.scenario, failing)
    if convention is None:
        convention = default_convention(params)
    _check_convention(params, convention)
    phi0 = GaussPoly((convention.n_phi,), params.kappa_phi)
    psi0 = GaussPoly((convention.n_psi,), params.kappa_psi)
    return phi0, psi0


# ---------------------------------------------------------------------------
# exact family construction


def _exact_ladder_step(coeffs, eff, nu):
    out = [(_F0, _F0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] = _cadd(out[i + 1], _cmul(eff, c))
        if i >= 1:
            out[i - 1] = _cadd(out[i - 1], _cmul(nu, _cscale(c, Fraction(i))))
    return out


def _log_prefactor(n: int) -> float:
    """log of (2^n n!)^{-1/2}, the factor relating Q_n to the family member."""
    return -0.5 * (n * math.log(2.0) + math.lgamma(n + 1))


@dataclass(frozen=True)
class EigenFamily:
    """Both families up to n_max, with exact coefficient shadows.

    phi[n] and psi[n] are the float GaussPoly members. phi_exact[n] holds the
    rational coefficients of Q_n (the member stripped of its normalization,
    (2^n n!)^{-1/2} prefactor and Gaussian), and log_prefactors[n] the log of
    that prefactor; the Gram and partial-sum paths recombine these without
    ever forming large float intermediates.
    """

    params: GbtParams
    convention: NormalizationConvention
    n_max: int
    phi: list[GaussPoly] = field(repr=False)
    psi: list[GaussPoly] = field(repr=False)
    phi_exact: list = field(repr=False)
    psi_exact: list = field(repr=False)
    kappa_phi_frac: tuple = field(repr=False)
    kappa_psi_frac: tuple = field(repr=False)
    log_prefactors: tuple = field(repr=False)


def build_family(params: GbtParams, n_max: int,
                 convention: NormalizationConvention | None = None
                 ) -> EigenFamily:
    """Iterate the raising operators n_max times from the ground states.

    The ladder step is applied in exact rational arithmetic with the sqrt(2)
    scale factored out (b = B/sqrt(2) with B = (gamma-alpha)x - (gamma+alpha)d/dx,
    and likewise a+ for the Psi side); sqrt(n!) normalization is carried in
    log scale and only enters the materialized float coefficients.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > N_MAX_CAP:
        raise ValueError(f"n_max {n_max} exceeds cap {N_MAX_CAP}")
    if convention is None:
        convention = default_convention(params)
    phi0, psi0 = ground_states(params, convention)

    a_f = _cfrac(params.alpha)
    b_f = _cfrac(params.beta)
    g_f = _cfrac(params.gamma)
    d_f = _cfrac(params.delta)

    kphi = _cmul(_cadd(b_f, _cneg(d_f)), _cinv(_cadd(b_f, d_f)))
    kpsi = _cconj(_cmul(_cadd(g_f, _cneg(a_f)), _cinv(_cadd(g_f, a_f))))

    # B = (gamma-alpha) x - (gamma+alpha) d/dx acting on Q e^{-kphi x^2/2}
    nu_phi = _cneg(_cadd(g_f, a_f))
    eff_phi = _cadd(_cadd(g_f, _cneg(a_f)), _cneg(_cmul(nu_phi, kphi)))
    # A = conj(beta-delta) x - conj(beta+delta) d/dx on Q e^{-kpsi x^2/2}
    nu_psi = _cneg(_cconj(_cadd(b_f, d_f)))
    eff_psi = _cadd(_cconj(_cadd(b_f, _cneg(d_f))),
                    _cneg(_cmul(nu_psi, kpsi)))

    phi_exact = [[(_F1, _F0)]]
    psi_exact = [[(_F1, _F0)]]
    for _ in range(n_max):
        phi_exact.append(_exact_ladder_step(phi_exact[-1], eff_phi, nu_phi))
        psi_exact.append(_exact_ladder_step(psi_exact[-1], eff_psi, nu_psi))

    log_pref = tuple(_log_prefactor(n) for n in range(n_max + 1))
    phi = []
    psi = []
    for n in range(n_max + 1):
        sp = convention.n_phi * math.exp(log_pref[n])
        phi.append(GaussPoly(
            tuple(sp * _to_complex(c) for c in phi_exact[n]),
            params.kappa_phi))
        sq = convention.n_psi * math.exp(log_pref[n])
        psi.append(GaussPoly(
            tuple(sq * _to_complex(c) for c in psi_exact[n]),
            params.kappa_psi))
    # ground states come straight from ground_states so the base case is shared
    phi[0] = phi0
    psi[0] = psi0
    return EigenFamily(
        params=params,
        convention=convention,
        n_max=n_max,
        phi=phi,
        psi=psi,
        phi_exact=phi_exact,
        psi_exact=psi_exact,
        kappa_phi_frac=kphi,
        kappa_psi_frac=kpsi,
        log_prefactors=log_pref,
    )


# ---------------------------------------------------------------------------
# closed forms


def closed_form_phi(params: GbtParams, n: int,
                    convention: NormalizationConvention | None = None
                    ) -> GaussPoly:
    """phi_n = N_phi (2^n n!)^{-1/2} r^{n/2} H_n(x / sqrt(P)) e^{-kappa_phi x^2/2}

    with r = (alpha+gamma)/(beta+delta) and P = (alpha+gamma)(beta+delta),
    principal branches. Verified coefficientwise against build_family.
    """
    if convention is None:
        convention = default_convention(params)
    ground_states(params, convention)  # scenario gate
    r = (params.alpha + params.gamma) / (params.beta + params.delta)
    arg_scale = cmath.exp(-0.5 * cmath.log(params.p_product))
    pref = (convention.n_phi
            * math.exp(_log_prefactor(n))
            * cmath.exp(0.5 * n * cmath.log(r)))
    coeffs = [pref * complex(h) * arg_scale ** i
              for i, h in enumerate(_hermite_exact(n))]
    return GaussPoly(tuple(coeffs), params.kappa_phi)


def closed_form_psi(params: GbtParams, n: int,
                    convention: NormalizationConvention | None = None
                    ) -> GaussPoly:
    """Same shape with the substitution (beta,delta,gamma,alpha) -> conj(gamma,alpha,beta,delta).

    That swap sends the generator b to a+, so the scale becomes
    conj((beta+delta)/(gamma+alpha)), the Hermite argument x / sqrt(conj(P)),
    and the exponent kappa_psi; N_Psi replaces N_phi.
    """
    if convention is None:
        convention = default_convention(params)
    ground_states(params, convention)
    r = ((params.beta + params.delta) / (params.gamma + params.alpha)).conjugate()
    arg_scale = cmath.exp(-0.5 * cmath.log(params.p_product.conjugate()))
    pref = (convention.n_psi
            * math.exp(_log_prefactor(n))
            * cmath.exp(0.5 * n * cmath.log(r)))
    coeffs = [pref * complex(h) * arg_scale ** i
              for i, h in enumerate(_hermite_exact(n))]
    return GaussPoly(tuple(coeffs), params.kappa_psi)


# ---------------------------------------------------------------------------
# verification

def _rel_residual(got: GaussPoly, expected: GaussPoly,
                  fallback_scale: float) -> float:
    scale = expected.max_abs_coeff() or fallback_scale
    return got.sub(expected).max_abs_coeff() / scale


@dataclass(frozen=True)
class LadderReport:
    max_residual: float
    by_relation: dict


def verify_ladder(family: EigenFamily) -> LadderReport:
    """Check a phi_n = sqrt(n) phi_{n-1}, b phi_n = sqrt(n+1) phi_{n+1},
    b+ Psi_n = sqrt(n) Psi_{n-1}, a+ Psi_n = sqrt(n+1) Psi_{n+1} coefficientwise.

    Residuals are relative to the max coefficient magnitude of the expected
    member; lowering at n=0 is checked against the zero function with the
    ground state setting the scale.
    """
    ops = ladder_operators(family.params)
    zero_phi = GaussPoly((), family.params.kappa_phi)
    zero_psi = GaussPoly((), family.params.kappa_psi)
    worst = {"lower_phi": 0.0, "raise_phi": 0.0,
             "lower_psi": 0.0, "raise_psi": 0.0}
    for n in range(family.n_max + 1):
        expected = (family.phi[n - 1].scale(math.sqrt(n))
                    if n >= 1 else zero_phi)
        worst["lower_phi"] = max(worst["lower_phi"], _rel_residual(
            apply_ladder(ops.a, family.phi[n]), expected,
            family.phi[n].max_abs_coeff()))
        expected = (family.psi[n - 1].scale(math.sqrt(n))
                    if n >= 1 else zero_psi)
        worst["lower_psi"] = max(worst["lower_psi"], _rel_residual(
            apply_ladder(ops.b_dagger, family.psi[n]), expected,
            family.psi[n].max_abs_coeff()))
        if n < family.n_max:
            worst["raise_phi"] = max(worst["raise_phi"], _rel_residual(
                apply_ladder(ops.b, family.phi[n]),
                family.phi[n + 1].scale(math.sqrt(n + 1)),
                family.phi[n].max_abs_coeff()))
            worst["raise_psi"] = max(worst["raise_psi"], _rel_residual(
                apply_ladder(ops.a_dagger, family.psi[n]),
                family.psi[n + 1].scale(math.sqrt(n + 1)),
                family.psi[n].max_abs_coeff()))
    return LadderReport(max_residual=max(worst.values()), by_relation=worst)


@dataclass(frozen=True)
class NumberOperatorReport:
    max_residual: float
    symmetry_residual: float | None


def number_operator_check(family: EigenFamily,
                          rng_seed: int = 1729) -> NumberOperatorReport:
    """N phi_n = n phi_n and N+ Psi_n = n Psi_n with N = ba, N+ = a+ b+.

    When alpha*beta = gamma*delta with real ordered parameters, N is a
    rescaled self-adjoint oscillator Hamiltonian; in that case the symmetry
    signature |<Nf,g> - <f,Ng>| is also measured on five seeded random
    Gaussian-polynomial pairs.
    """
    ops = ladder_operators(family.params)
    worst = 0.0
    for n in range(family.n_max + 1):
        got = apply_ladder(ops.b, apply_ladder(ops.a, family.phi[n]))
        worst = max(worst, _rel_residual(
            got, family.phi[n].scale(float(n)),
            family.phi[n].max_abs_coeff()))
        got = apply_ladder(ops.a_dagger,
                           apply_ladder(ops.b_dagger, family.psi[n]))
        worst = max(worst, _rel_residual(
            got, family.psi[n].scale(float(n)),
            family.psi[n].max_abs_coeff()))

    symmetry = None
    p = family.params
    anomaly = p.alpha * p.beta - p.gamma * p.delta
    if p.is_real_ordered and abs(anomaly) <= 1e-12:
        rng = np.random.default_rng(rng_seed)
        symmetry = 0.0
        for _ in range(5):
            f = GaussPoly(tuple(rng.standard_normal(5)
                                + 1j * rng.standard_normal(5)), 1.0)
            g = GaussPoly(tuple(rng.standard_normal(5)
                                + 1j * rng.standard_normal(5)), 1.0)
            nf = apply_ladder(ops.b, apply_ladder(ops.a, f))
            ng = apply_ladder(ops.b, apply_ladder(ops.a, g))
            symmetry = max(symmetry, abs(inner_product(nf, g)
                                         - inner_product(f, ng)))
    return NumberOperatorReport(max_residual=worst,
                                symmetry_residual=symmetry)


def biorthonormality_matrix(family: EigenFamily,
                            n_max: int | None = None) -> np.ndarray:
    """Gram matrix G[i, j] = <phi_i, Psi_j>, expected to be the identity.

    Computed from the exact coefficient shadows: the rational bilinear sum is
    exact (odd/even parity mismatches come out exactly zero) and only the
    normalization, prefactors and sqrt(pi/sigma) multiply in floating point.
    """
    if n_max is None:
        n_max = family.n_max
    if n_max > family.n_max:
        raise ValueError("family was not built to the requested n_max")
    sigma_frac = _cscale(_cadd(_cconj(family.kappa_phi_frac),
                               family.kappa_psi_frac), Fraction(1, 2))
    scale0 = family.convention.n_phi.conjugate() * family.convention.n_psi
    gram = np.empty((n_max + 1, n_max + 1), dtype=complex)
    conj_phi = [[_cconj(c) for c in family.phi_exact[i]]
                for i in range(n_max + 1)]
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            val = _exact_inner(conj_phi[i], family.psi_exact[j], sigma_frac)
            gram[i, j] = (scale0 * val
                          * math.exp(family.log_prefactors[i]
                                     + family.log_prefactors[j]))
    return gram


# ---------------------------------------------------------------------------
# exact pairings against family members (used by the quasi-basis sums)


def inner_with_phi(family: EigenFamily, f: GaussPoly, n: int) -> complex:
    """<f, phi_n> with the phi_n side taken from the exact shadow."""
    sigma_frac = _cscale(_cadd(_cconj(_cfrac(f.kappa)),
                               family.kappa_phi_frac), Fraction(1, 2))
    fc = [_cconj(_cfrac(c)) for c in f.coeffs]
    val = _exact_inner(fc, family.phi_exact[n], sigma_frac)
    return val * family.convention.n_phi * math.exp(family.log_prefactors[n])


def inner_with_psi(family: EigenFamily, f: GaussPoly, n: int) -> complex:
    """<f, Psi_n> with the Psi_n side taken from the exact shadow."""
    sigma_frac = _cscale(_cadd(_cconj(_cfrac(f.kappa)),
                               family.kappa_psi_frac), Fraction(1, 2))
    fc = [_cconj(_cfrac(c)) for c in f.coeffs]
    val = _exact_inner(fc, family.psi_exact[n], sigma_frac)
    return val * family.convention.n_psi * math.exp(family.log_prefactors[n])
