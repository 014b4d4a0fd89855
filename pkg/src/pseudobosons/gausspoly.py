"""Exact algebra of functions p(x) e^{-kappa x^2/2}.

Every eigenfunction and analytic test function in the package lives in this
representation: a complex polynomial in ascending-degree tuple form plus a
complex Gaussian width. Ladder operators mu*x + nu*d/dx act exactly (degree
changes by at most one, kappa is untouched); inner products are computed by
exact moment expansion, never by quadrature, so the oracle module stays an
independent witness.

The moment expansion is summed in exact rational arithmetic (pairs of
Fractions for real/imaginary parts). Double-precision summation of the
monomial moments loses about seven digits to cancellation by degree 30, which
would sink the biorthonormality checks; the rational path is exact given the
stored coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NonIntegrableError, PseudoBosonError
from .specialfns import gaussian_moment  # noqa: F401  (re-exported convenience)

__all__ = [
    "GaussPoly",
    "LadderOperator",
    "apply_ladder",
    "inner_product",
    "commutator_check",
    "adjoint",
]


# ---------------------------------------------------------------------------
# complex rationals as (Fraction real, Fraction imag) pairs

_F0 = Fraction(0)
_F1 = Fraction(1)


def _cfrac(z) -> tuple[Fraction, Fraction]:
    z = complex(z)
    return (Fraction(z.real), Fraction(z.imag))


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cconj(a):
    return (a[0], -a[1])


def _cneg(a):
    return (-a[0], -a[1])


def _cinv(a):
    d = a[0] * a[0] + a[1] * a[1]
    if d == 0:
        raise ZeroDivisionError("inverse of exact zero")
    return (a[0] / d, -a[1] / d)


def _cscale(a, s: Fraction):
    return (a[0] * s, a[1] * s)


def _to_complex(a) -> complex:
    return complex(float(a[0]), float(a[1]))


@lru_cache(maxsize=None)
def _double_factorial(m: int) -> int:
    """(m-1)!! for even m >= 0, i.e. the moment count 1*3*5*...*(m-1)."""
    if m <= 0:
        return 1
    return _double_factorial(m - 2) * (m - 1)


def _exact_moment_sum(r, w):
    """Sum r_m (m-1)!! w^{m/2} over even m, all in complex rationals.

    r is the coefficient list of the product polynomial, w = 1/(2 sigma).
    Together with the sqrt(pi/sigma) prefactor this is the full expansion of
    the Gaussian integral of the product.
    """
    acc = (_F0, _F0)
    wpow = (_F1, _F0)
    for m in range(0, len(r), 2):
        if m > 0:
            wpow = _cmul(wpow, w)
        term = _cscale(_cmul(r[m], wpow), Fraction(_double_factorial(m)))
        acc = _cadd(acc, term)
    return acc


def _conv(a, b):
    out = [(_F0, _F0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = _cadd(out[i + j], _cmul(ai, bj))
    return out


def _exact_inner(fc_conj, gc, sigma_frac) -> complex:
    """Gaussian inner product from exact coefficient pairs.

    fc_conj: already-conjugated rational coefficients of the left factor;
    gc: rational coefficients of the right factor; sigma_frac: the exact
    combined width (conj(kappa_f)+kappa_g)/2 as a rational pair. Everything
    but the final sqrt(pi/sigma) prefactor stays exact.
    """
    sigma = _to_complex(sigma_frac)
    if sigma.real <= 0.0:
        raise NonIntegrableError(
            f"inner product has non-decaying Gaussian factor: Re(sigma) = {sigma.real}"
        )
    if not fc_conj or not gc:
        return 0.0
    r = _conv(fc_conj, gc)
    w = _cinv(_cscale(sigma_frac, Fraction(2)))
    s = _exact_moment_sum(r, w)
    prefactor = cmath.exp(0.5 * (cmath.log(math.pi) - cmath.log(sigma)))
    return prefactor * _to_complex(s)


# ---------------------------------------------------------------------------
# value types


def _trimmed(coeffs) -> tuple[complex, ...]:
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class GaussPoly:
    """p(x) * exp(-kappa x^2 / 2) with p in ascending-degree coefficients.

    The zero function is the empty coefficient tuple (any kappa); trailing
    exact zeros are trimmed on construction so the leading coefficient of a
    nonzero polynomial is nonzero.
    """

    coeffs: tuple[complex, ...]
    kappa: complex

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))
        object.__setattr__(self, "kappa", complex(self.kappa))

    @property
    def degree(self) -> int:
        """-1 for the zero function."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def square_integrable(self) -> bool:
        return self.is_zero or self.kappa.real > 0.0

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def scale(self, c: complex) -> "GaussPoly":
        return GaussPoly(tuple(c * a for a in self.coeffs), self.kappa)

    def add(self, other: "GaussPoly") -> "GaussPoly":
        if not (self.is_zero or other.is_zero) and self.kappa != other.kappa:
            raise ValueError("cannot add GaussPolys with different kappa")
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [0j] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        kappa = other.kappa if self.is_zero else self.kappa
        return GaussPoly(tuple(cs), kappa)

    def sub(self, other: "GaussPoly") -> "GaussPoly":
        return self.add(other.scale(-1.0))

    def __call__(self, x):
        x = np.asarray(x)
        if self.is_zero:
            return np.zeros_like(x, dtype=complex)
        p = np.polynomial.polynomial.polyval(x, np.array(self.coeffs))
        return p * np.exp(-0.5 * self.kappa * x * x)


@dataclass(frozen=True)
class LadderOperator:
    """First-order operator mu*x + nu*d/dx (realizes a, b and their adjoints)."""

    x_coeff: complex
    d_coeff: complex

    def __post_init__(self):
        object.__setattr__(self, "x_coeff", complex(self.x_coeff))
        object.__setattr__(self, "d_coeff", complex(self.d_coeff))
        if self.x_coeff == 0 and self.d_coeff == 0:
            raise ValueError("ladder operator must not be identically zero")


# ---------------------------------------------------------------------------
# operations


def apply_ladder(op: LadderOperator, f: GaussPoly) -> GaussPoly:
    """(mu x + nu d/dx) applied to f, exactly.

    On p e^{-kappa x^2/2} the result is [(mu - nu*kappa) x p + nu p'] times the
    same Gaussian; no truncation is introduced and kappa is unchanged.
    """
    if f.is_zero:
        return f
    mu, nu = op.x_coeff, op.d_coeff
    eff = mu - nu * f.kappa
    out = [0j] * (len(f.coeffs) + 1)
    for i, c in enumerate(f.coeffs):
        out[i + 1] += eff * c
        if i >= 1:
            out[i - 1] += nu * i * c
    return GaussPoly(tuple(out), f.kappa)


def inner_product(f: GaussPoly, g: GaussPoly) -> complex:
    """<f, g> = integral of conj(f(x)) g(x) dx, conjugate-linear in f.

    Expanded over Gaussian moments: with sigma = (conj(kappa_f)+kappa_g)/2 the
    value is sqrt(pi/sigma) * sum over even m of r_m (m-1)!! / (2 sigma)^{m/2},
    r the coefficients of conj(p_f)*p_g. The sum is carried in exact rational
    arithmetic; only the final prefactor multiplies in floating point.
    """
    sigma_frac = _cscale(_cadd(_cconj(_cfrac(f.kappa)), _cfrac(g.kappa)),
                         Fraction(1, 2))
    fc = [_cconj(_cfrac(c)) for c in f.coeffs]
    gc = [_cfrac(c) for c in g.coeffs]
    return _exact_inner(fc, gc, sigma_frac)


def commutator_check(opA: LadderOperator, opB: LadderOperator,
                     f: GaussPoly) -> complex:
    """Scalar lambda with (AB - BA) f = lambda f.

    For first-order operators the commutator is always the scalar
    nu_A mu_B - nu_B mu_A; the residual after subtracting lambda*f is a safety
    assertion against representation bugs, not a numerical question.
    """
    if f.is_zero:
        raise ValueError("commutator scalar is undefined for the zero function")
    lam = opA.d_coeff * opB.x_coeff - opB.d_coeff * opA.x_coeff
    g = apply_ladder(opA, apply_ladder(opB, f)).sub(
        apply_ladder(opB, apply_ladder(opA, f)))
    resid = g.sub(f.scale(lam)).max_abs_coeff()
    bound = 1e-10 * max(1.0, abs(lam)) * f.max_abs_coeff()
    if resid > bound:
        raise PseudoBosonError(
            f"commutator residual {resid:.3e} not proportional to f "
            f"(bound {bound:.3e})"
        )
    return lam


def adjoint(op: LadderOperator) -> LadderOperator:
    """Formal adjoint: mu*x + nu*d/dx maps to conj(mu)*x - conj(nu)*d/dx."""
    return LadderOperator(op.x_coeff.conjugate(), -op.d_coeff.conjugate())
