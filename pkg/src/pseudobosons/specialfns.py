"""Hermite and Legendre evaluation, Gaussian moments, log-domain magnitudes.

Everything n-dependent that grows or decays geometrically is carried in
natural-log scale (``LogMagnitude``); linear values are materialized only on
demand. Complex powers and square roots use the principal branch throughout
the package; that convention is stated here once.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NonIntegrableError

MAX_HERMITE_N = 500

__all__ = [
    "LogMagnitude",
    "MAX_HERMITE_N",
    "hermite_coeffs",
    "hermite_value",
    "legendre_eval",
    "legendre_asymptotic",
    "gaussian_moment",
    "hermite_basis_function",
]


@dataclass(frozen=True)
class LogMagnitude:
    """A complex value stored as log|z| plus a unit phase (or 0 for zero).

    ``log_abs`` is meaningless when ``sign_or_phase == 0``; zero is encoded
    explicitly so that ratios and products stay well-defined.
    """

    log_abs: float
    sign_or_phase: complex = 1.0

    @classmethod
    def from_value(cls, z: complex) -> "LogMagnitude":
        z = complex(z)
        if z == 0:
            return cls(float("-inf"), 0.0)
        return cls(math.log(abs(z)), z / abs(z))

    @classmethod
    def zero(cls) -> "LogMagnitude":
        return cls(float("-inf"), 0.0)

    @property
    def is_zero(self) -> bool:
        return self.sign_or_phase == 0

    def value(self) -> complex:
        """Materialize the linear-scale value (may overflow for huge log_abs)."""
        if self.is_zero:
            return 0.0
        return self.sign_or_phase * math.exp(self.log_abs)

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        if self.is_zero or other.is_zero:
            return LogMagnitude.zero()
        return LogMagnitude(self.log_abs + other.log_abs,
                            self.sign_or_phase * other.sign_or_phase)


@lru_cache(maxsize=None)
def _hermite_exact(n: int) -> tuple[int, ...]:
    """Exact integer coefficients of H_n, ascending degree.

    Kept as Python big ints: the float arrays handed out by hermite_coeffs
    are rounded above n~30, and monomial evaluation from rounded coefficients
    is badly conditioned at large |x|, so validation has to run against the
    exact content.
    """
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 2)
    prev2 = _hermite_exact(n - 2)
    prev = _hermite_exact(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(prev):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev2):
        out[i] -= 2 * (n - 1) * c
    return tuple(out)


def _saturating_complex(c: int) -> complex:
    try:
        return complex(c)
    except OverflowError:
        return complex(math.inf if c > 0 else -math.inf)


def hermite_coeffs(n: int) -> np.ndarray:
    """Coefficients of the physicists' Hermite polynomial H_n, ascending degree.

    H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}. Returned as complex
    floats; magnitudes exceed 2^53 near n=30, so the arrays are rounded there
    and trusted (for value evaluation at |x| <= 5) only up to n ~ 25. Past
    n ~ 260 the largest coefficients leave float range entirely and saturate
    to +-inf; the exact integer content stays available internally.
    """
    if n < 0:
        raise ValueError("Hermite degree must be nonnegative")
    if n > MAX_HERMITE_N:
        raise ValueError(
            f"Hermite degree {n} exceeds configured maximum {MAX_HERMITE_N}"
        )
    return np.array([_saturating_complex(c) for c in _hermite_exact(n)])


def hermite_value(n: int, x: float) -> float:
    """H_n(x) by the three-term value recurrence (the accuracy carrier)."""
    if n < 0:
        raise ValueError("Hermite degree must be nonnegative")
    if n > MAX_HERMITE_N:
        raise ValueError(
            f"Hermite degree {n} exceeds configured maximum {MAX_HERMITE_N}"
        )
    if n == 0:
        return 1.0
    hm, h = 1.0, 2.0 * x
    for k in range(1, n):
        hm, h = h, 2.0 * x * h - 2.0 * k * hm
    return h


def hermite_value_exact(n: int, x: float) -> float:
    """H_n(x) by exact rational summation of the integer coefficients.

    Independent of the float value recurrence; used by consistency checks.
    """
    fx = Fraction(float(x))
    acc = Fraction(0)
    power = Fraction(1)
    for c in _hermite_exact(n):
        acc += c * power
        power *= fx
    return float(acc)


_LEGENDRE_RESCALE = 1e250
_LEGENDRE_DOMAIN_TOL = 1e-12


def legendre_eval(n: int, x: float) -> LogMagnitude:
    """P_n(x) for x >= 1 via the three-term recurrence, in log scale.

    (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}; the running pair is renormalized
    whenever it grows past 1e250 so degrees in the hundreds stay finite.
    P_n(x) >= 1 on this domain, so the returned phase is always +1.
    """
    if n < 0:
        raise ValueError("Legendre degree must be nonnegative")
    if x < 1.0 - _LEGENDRE_DOMAIN_TOL:
        raise ValueError(
            f"Legendre argument {x} < 1: inconsistent parameters upstream"
        )
    x = max(float(x), 1.0)
    if n == 0:
        return LogMagnitude(0.0, 1.0)
    offset = 0.0
    pm, p = 1.0, x
    for k in range(1, n):
        pm, p = p, ((2 * k + 1) * x * p - k * pm) / (k + 1)
        if p > _LEGENDRE_RESCALE:
            offset += math.log(p)
            pm /= p
            p = 1.0
    return LogMagnitude(offset + math.log(p), 1.0)


def legendre_asymptotic(n: int, x: float) -> LogMagnitude:
    """Large-n approximation (2*pi*n)^{-1/2} (x^2-1)^{-1/4} (x+sqrt(x^2-1))^{n+1/2}.

    Valid for x > 1 strictly; log scale keeps it finite for any such x.
    """
    if n < 1:
        raise ValueError("asymptotic form needs n >= 1")
    if x <= 1.0:
        raise ValueError("asymptotic form needs x > 1 strictly")
    log_val = (
        -0.5 * math.log(2.0 * math.pi * n)
        - 0.25 * math.log(x * x - 1.0)
        + (n + 0.5) * math.log(x + math.sqrt(x * x - 1.0))
    )
    return LogMagnitude(log_val, 1.0)


def gaussian_moment(m: int, sigma: complex) -> complex:
    """Integral of x^m e^{-sigma x^2} over the real line.

    Zero for odd m; Gamma((m+1)/2) / sigma^{(m+1)/2} (principal branch) for
    even m. Needs Re(sigma) > 0.
    """
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    sigma = complex(sigma)
    if sigma.real <= 0.0:
        raise NonIntegrableError(
            f"gaussian_moment needs Re(sigma) > 0, got {sigma}"
        )
    if m % 2 == 1:
        return 0.0
    log_gamma = math.lgamma((m + 1) / 2.0)
    return cmath.exp(log_gamma - ((m + 1) / 2.0) * cmath.log(sigma))


def hermite_basis_function(n: int):
    """The harmonic-oscillator eigenfunction e_n = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).

    Returned as a GaussPoly with kappa = 1.
    """
    from .gausspoly import GaussPoly

    log_norm = 0.5 * (n * math.log(2.0) + math.lgamma(n + 1)
                      + 0.5 * math.log(math.pi))
    scale = math.exp(-log_norm)
    coeffs = tuple(scale * complex(c) for c in _hermite_exact(n))
    return GaussPoly(coeffs, 1.0)
