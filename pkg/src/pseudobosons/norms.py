"""Closed-form squared norms, constrained simplifications, large-n asymptotics.

The closed forms are established for real parameters with beta > delta > 0 and
gamma > alpha > 0; outside that regime (complex families in particular) every
norm question is answered by the quadrature oracle instead, and the functions
here refuse with UseOracleError.

The overall n-independent constant of the norm expression is calibrated once
per parameter set against the oracle at n = 0. Desk derivation fixes it at
sqrt(pi) |N|^2 (the full-line integral is twice the half-line one); the
calibration record keeps the measured value, the analytic one, and the ratio
to the sqrt(pi)/2 variant one finds in print, which comes out as 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigensystem import (
    NormalizationConvention,
    default_convention,
    ground_states,
)
from .errors import PseudoBosonError, UseOracleError
from .gbt import GbtParams, anomaly
from .oracle import QuadratureSpec, quad_inner
from .specialfns import LogMagnitude, legendre_eval

ANOMALY_ZERO_TOL = 1e-12
BOUNDED_TOL = 1e-12

TREND_DIVERGES = "diverges"
TREND_VANISHES = "vanishes"
TREND_BOUNDED = "bounded"

__all__ = [
    "AsymptoticsReport",
    "NormSeries",
    "CalibrationRecord",
    "NormProductTrend",
    "prudnikov_halfline",
    "calibration",
    "norm_sq_phi",
    "norm_sq_psi",
    "closed_form_series",
    "asymptotics",
    "norm_product_trend",
]


@dataclass(frozen=True)
class NormSeries:
    params: GbtParams
    values: tuple
    source: str


@dataclass(frozen=True)
class AsymptoticsReport:
    """Growth bases x, y, Legendre argument s and the asymptotic constants.

    ||phi_n||^2 ~ a_phi x^n / sqrt(n) and ||Psi_n||^2 ~ a_psi y^n / sqrt(n);
    a_const is the bare Legendre-asymptotic constant
    (2 pi)^{-1/2} (s^2-1)^{-1/4} (s + sqrt(s^2-1))^{1/2}. When the anomaly
    vanishes s = 1 and the three constants are None (the P_n(1) = 1 branch
    has no 1/sqrt(n) factor to normalize).
    """

    x: float
    y: float
    s: float
    a_const: float | None
    a_phi: float | None
    a_psi: float | None
    product_base: float
    phi_trend: str
    psi_trend: str


@dataclass(frozen=True)
class CalibrationRecord:
    """Oracle-measured n-independent norm constants and their analytic values."""

    measured_phi: float
    measured_psi: float
    analytic_phi: float
    analytic_psi: float
    rel_error_phi: float
    rel_error_psi: float
    ratio_to_printed_phi: float
    ratio_to_printed_psi: float


@dataclass(frozen=True)
class NormProductTrend:
    log_products: tuple
    anomaly_abs: float
    constant: bool | None
    max_abs_variation: float | None
    fitted_slope: float | None
    expected_slope: float | None
    window: tuple


def _require_real_ordered(params: GbtParams) -> None:
    if not params.is_real_ordered:
        raise UseOracleError(
            "closed-form norms need real parameters with beta > delta > 0 and "
            "gamma > alpha > 0; use the quadrature oracle outside that regime"
        )


def _legendre_complex(n: int, z: complex) -> complex:
    if n == 0:
        return 1.0
    pm, p = 1.0, z
    for k in range(1, n):
        pm, p = p, ((2 * k + 1) * z * p - k * pm) / (k + 1)
    return p


def prudnikov_halfline(p: complex, b: complex, c: complex, n: int) -> complex:
    """Half-line integral of e^{-p x^2} H_n(b x) H_n(c x) dx.

    Equals 2^{n-1} n! sqrt(pi) p^{-(n+1)/2} (b^2+c^2-p)^{n/2}
    P_n(bc / sqrt(p (b^2+c^2-p))) for Re(p) > 0. Real inputs run through the
    log-scale Legendre path (the argument must then be >= 1); complex inputs
    use the direct complex recurrence, fine for the modest n this is called
    with.
    """
    p, b, c = complex(p), complex(b), complex(c)
    if p.real <= 0.0:
        raise PseudoBosonError(f"prudnikov_halfline needs Re(p) > 0, got {p}")
    q = b * b + c * c - p
    log_front = (n - 1) * math.log(2.0) + math.lgamma(n + 1) \
        + 0.5 * math.log(math.pi)
    if p.imag == 0 and b.imag == 0 and c.imag == 0:
        if q.real <= 0.0:
            raise PseudoBosonError(
                f"real-regime argument b^2+c^2-p = {q.real} must be positive"
            )
        arg = (b.real * c.real) / math.sqrt(p.real * q.real)
        if arg < 1.0 - 1e-12:
            raise PseudoBosonError(
                f"Legendre argument {arg} < 1: inconsistent real-regime inputs"
            )
        leg = legendre_eval(n, arg)
        log_val = (log_front
                   - 0.5 * (n + 1) * math.log(p.real)
                   + 0.5 * n * math.log(q.real)
                   + leg.log_abs)
        return math.exp(log_val)
    leg = _legendre_complex(n, b * c / cmath.sqrt(p * q))
    return (cmath.exp(log_front
                      - 0.5 * (n + 1) * cmath.log(p)
                      + 0.5 * n * cmath.log(q))
            * leg)


def _ratios_phi(params: GbtParams):
    a, b = params.alpha.real, params.beta.real
    g, d = params.gamma.real, params.delta.real
    return ((a + g) / (b + d), (b + d) / (b - d), (g - a) / (g + a))


def _ratios_psi(params: GbtParams):
    a, b = params.alpha.real, params.beta.real
    g, d = params.gamma.real, params.delta.real
    return ((b + d) / (g + a), (g + a) / (g - a), (b - d) / (b + d))


def _legendre_s(params: GbtParams) -> float:
    a, b = params.alpha.real, params.beta.real
    g, d = params.gamma.real, params.delta.real
    return 1.0 / math.sqrt((b * b - d * d) * (g * g - a * a))


@lru_cache(maxsize=None)
def _calibration_cached(params: GbtParams,
                        convention: NormalizationConvention,
                        spec: QuadratureSpec | None) -> CalibrationRecord:
    phi0, psi0 = ground_states(params, convention)
    v_phi = quad_inner(phi0, phi0, spec).value.real
    v_psi = quad_inner(psi0, psi0, spec).value.real
    measured_phi = v_phi / math.sqrt(_ratios_phi(params)[1])
    measured_psi = v_psi / math.sqrt(_ratios_psi(params)[1])
    analytic_phi = math.sqrt(math.pi) * abs(convention.n_phi) ** 2
    analytic_psi = math.sqrt(math.pi) * abs(convention.n_psi) ** 2
    return CalibrationRecord(
        measured_phi=measured_phi,
        measured_psi=measured_psi,
        analytic_phi=analytic_phi,
        analytic_psi=analytic_psi,
        rel_error_phi=abs(measured_phi - analytic_phi) / analytic_phi,
        rel_error_psi=abs(measured_psi - analytic_psi) / analytic_psi,
        ratio_to_printed_phi=measured_phi / (0.5 * analytic_phi),
        ratio_to_printed_psi=measured_psi / (0.5 * analytic_psi),
    )


def calibration(params: GbtParams,
                convention: NormalizationConvention | None = None,
                spec: QuadratureSpec | None = None) -> CalibrationRecord:
    """Measure the n-independent norm constants against the oracle at n = 0."""
    _require_real_ordered(params)
    if convention is None:
        convention = default_convention(params)
    return _calibration_cached(params, convention, spec)


def _norm_sq(params: GbtParams, n: int, measured_const: float,
             ratios) -> LogMagnitude:
    r1, r2, r3 = ratios
    s = _legendre_s(params)
    log_val = (math.log(measured_const)
               + n * math.log(r1)
               + 0.5 * (n + 1) * math.log(r2)
               + 0.5 * n * math.log(r3)
               + legendre_eval(n, s).log_abs)
    return LogMagnitude(log_val, 1.0)


def norm_sq_phi(params: GbtParams, n: int,
                convention: NormalizationConvention | None = None
                ) -> LogMagnitude:
    """||phi_n||^2 in log scale:

    C * ((alpha+gamma)/(beta+delta))^n * ((beta+delta)/(beta-delta))^{(n+1)/2}
      * ((gamma-alpha)/(gamma+alpha))^{n/2} * P_n(s),
    s = 1/sqrt((beta^2-delta^2)(gamma^2-alpha^2)), C oracle-calibrated at n=0.
    """
    _require_real_ordered(params)
    if convention is None:
        convention = default_convention(params)
    cal = calibration(params, convention)
    return _norm_sq(params, n, cal.measured_phi, _ratios_phi(params))


def norm_sq_psi(params: GbtParams, n: int,
                convention: NormalizationConvention | None = None
                ) -> LogMagnitude:
    """||Psi_n||^2 in log scale; the phi expression with (beta,delta) and
    (gamma,alpha) exchanging roles."""
    _require_real_ordered(params)
    if convention is None:
        convention = default_convention(params)
    cal = calibration(params, convention)
    return _norm_sq(params, n, cal.measured_psi, _ratios_psi(params))


def closed_form_series(params: GbtParams, n_max: int,
                       convention: NormalizationConvention | None = None
                       ) -> tuple[NormSeries, NormSeries]:
    if convention is None:
        convention = default_convention(params)
    phi_vals = tuple(norm_sq_phi(params, n, convention)
                     for n in range(n_max + 1))
    psi_vals = tuple(norm_sq_psi(params, n, convention)
                     for n in range(n_max + 1))
    return (NormSeries(params=params, values=phi_vals, source="closed_form"),
            NormSeries(params=params, values=psi_vals, source="closed_form"))


def _trend_of(base: float) -> str:
    if abs(base - 1.0) <= BOUNDED_TOL:
        return TREND_BOUNDED
    return TREND_DIVERGES if base > 1.0 else TREND_VANISHES


def asymptotics(params: GbtParams,
                convention: NormalizationConvention | None = None
                ) -> AsymptoticsReport:
    """Growth bases x = (1+|anomaly|)/(beta^2-delta^2), y likewise with
    (gamma^2-alpha^2), and the constants of the x^n / sqrt(n) law.

    The product base xy always equals (1+t)/(1-t) with t = |anomaly| (the
    determinant identity); for t = 0 the exact P_n(1) = 1 branch applies and
    the asymptotic constants are None.
    """
    _require_real_ordered(params)
    if convention is None:
        convention = default_convention(params)
    t = abs(anomaly(params))
    if t >= 1.0:
        raise PseudoBosonError(
            f"|alpha*beta - gamma*delta| = {t} >= 1 contradicts the "
            f"determinant identity for real ordered parameters"
        )
    a, b = params.alpha.real, params.beta.real
    g, d = params.gamma.real, params.delta.real
    x = (1.0 + t) / (b * b - d * d)
    y = (1.0 + t) / (g * g - a * a)
    if t <= ANOMALY_ZERO_TOL:
        return AsymptoticsReport(
            x=x, y=y, s=1.0, a_const=None, a_phi=None, a_psi=None,
            product_base=x * y,
            phi_trend=_trend_of(x), psi_trend=_trend_of(y))
    s = _legendre_s(params)
    a_const = ((2.0 * math.pi) ** -0.5
               * (s * s - 1.0) ** -0.25
               * (s + math.sqrt(s * s - 1.0)) ** 0.5)
    cal = calibration(params, convention)
    a_phi = a_const * cal.measured_phi * math.sqrt(_ratios_phi(params)[1])
    a_psi = a_const * cal.measured_psi * math.sqrt(_ratios_psi(params)[1])
    return AsymptoticsReport(
        x=x, y=y, s=s, a_const=a_const, a_phi=a_phi, a_psi=a_psi,
        product_base=x * y,
        phi_trend=_trend_of(x), psi_trend=_trend_of(y))


def norm_product_trend(params: GbtParams, n_max: int,
                       convention: NormalizationConvention | None = None
                       ) -> NormProductTrend:
    """ln(||phi_n||^2 ||Psi_n||^2) over n, with the anomaly-driven split.

    Zero anomaly: the product must be n-independent (measured variation is
    reported against a 1e-10 budget). Nonzero anomaly: a straight line is
    fitted over the upper three quarters of the range and compared to the
    expected slope ln((1+t)/(1-t)).
    """
    _require_real_ordered(params)
    if convention is None:
        convention = default_convention(params)
    t = abs(anomaly(params))
    lp = tuple(norm_sq_phi(params, n, convention).log_abs
               + norm_sq_psi(params, n, convention).log_abs
               for n in range(n_max + 1))
    if t <= ANOMALY_ZERO_TOL:
        ref = lp[0]
        max_var = max(abs(v - ref) for v in lp)
        return NormProductTrend(
            log_products=lp, anomaly_abs=t,
            constant=max_var <= 1e-10 * max(1.0, abs(ref)),
            max_abs_variation=max_var,
            fitted_slope=None, expected_slope=None,
            window=(0, n_max))
    lo = n_max // 4
    ns = np.arange(lo, n_max + 1)
    slope = float(np.polyfit(ns, np.array(lp[lo:]), 1)[0])
    return NormProductTrend(
        log_products=lp, anomaly_abs=t,
        constant=None, max_abs_variation=None,
        fitted_slope=slope,
        expected_slope=math.log((1.0 + t) / (1.0 - t)),
        window=(lo, n_max))
