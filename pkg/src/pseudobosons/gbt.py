"""Generalized Bogoliubov transformation parameters and their classification.

A GBT sends (c, c+) to a = beta*c - delta*c+ and b = -alpha*c + gamma*c+ with
unit determinant beta*gamma - alpha*delta = 1; b need not equal the adjoint of
a. Normalizability of the two ground states splits parameter space into the
four scenarios A-D, and the anomaly alpha*beta - gamma*delta separates genuine
biorthogonal bases from quasi-basis behavior downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateExponentError,
    DeterminantError,
    OrderingError,
    PseudoBosonError,
)

DET_TOL = 1e-12
IDENTITY_TOL = 1e-12
_CONJ_PAIR_TOL = 1e-12

__all__ = [
    "GbtParams",
    "NormalizabilityReport",
    "SwansonParams",
    "validate",
    "normalizability",
    "swanson",
    "constrained_family",
    "anomaly",
]


@dataclass(frozen=True)
class GbtParams:
    """The four complex entries of the transformation matrix."""

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def det(self) -> complex:
        return self.beta * self.gamma - self.alpha * self.delta

    @property
    def kappa_phi(self) -> complex:
        """Ground-state exponent of the phi family: (beta-delta)/(beta+delta)."""
        return (self.beta - self.delta) / (self.beta + self.delta)

    @property
    def kappa_psi(self) -> complex:
        """Ground-state exponent of the Psi family: conj((gamma-alpha)/(gamma+alpha))."""
        return ((self.gamma - self.alpha) / (self.gamma + self.alpha)).conjugate()

    @property
    def p_product(self) -> complex:
        """(alpha+gamma)(beta+delta), the scale entering normalization and widths."""
        return (self.alpha + self.gamma) * (self.beta + self.delta)

    @property
    def is_real(self) -> bool:
        return all(z.imag == 0.0 for z in
                   (self.alpha, self.beta, self.gamma, self.delta))

    @property
    def is_real_ordered(self) -> bool:
        """Real parameters with beta > delta > 0 and gamma > alpha > 0.

        The regime in which the closed-form norm expressions are established;
        everything else goes through the quadrature oracle.
        """
        if not self.is_real:
            return False
        a, b, g, d = (self.alpha.real, self.beta.real,
                      self.gamma.real, self.delta.real)
        return b > d > 0 and g > a > 0

    @property
    def conjugate_pair(self) -> bool:
        """True when b = a+ (the transformation is a standard Bogoliubov one)."""
        return (abs(self.gamma - self.beta.conjugate()) <= _CONJ_PAIR_TOL
                and abs(self.alpha - self.delta.conjugate()) <= _CONJ_PAIR_TOL)


@dataclass(frozen=True)
class NormalizabilityReport:
    phi0_in_H: bool
    psi0_in_H: bool
    scenario: str
    re_phi_exponent: float
    re_psi_exponent: float


@dataclass(frozen=True)
class SwansonParams:
    """The angle of the one-parameter complex family, in (-pi/4, pi/4) \\ {0}."""

    theta: float

    def __post_init__(self):
        t = float(self.theta)
        object.__setattr__(self, "theta", t)
        if not (-math.pi / 4 < t < math.pi / 4) or t == 0.0:
            raise ValueError(
                f"theta must lie in (-pi/4, pi/4) excluding 0, got {t}"
            )


def validate(params: GbtParams) -> GbtParams:
    """Check the determinant and exponent-degeneracy invariants.

    Returns the params unchanged when valid. Whether b differs from the
    adjoint of a is exposed as ``params.conjugate_pair``.
    """
    det = params.det
    if abs(det - 1.0) > DET_TOL:
        raise DeterminantError(det)
    if params.beta + params.delta == 0:
        raise DegenerateExponentError("beta + delta = 0: phi exponent undefined")
    if params.gamma + params.alpha == 0:
        raise DegenerateExponentError("gamma + alpha = 0: Psi exponent undefined")
    return params


_SCENARIOS = {(True, True): "D", (True, False): "A",
              (False, True): "B", (False, False): "C"}


def normalizability(params: GbtParams) -> NormalizabilityReport:
    """Strict-sign test of the two ground-state exponents.

    phi_0 is square-integrable iff Re((beta-delta)/(beta+delta)) > 0 and Psi_0
    iff Re((gamma-alpha)/(gamma+alpha)) > 0; the boundary Re(...) = 0 counts
    as not normalizable (a pure phase Gaussian is not in L^2).
    """
    validate(params)
    re_phi = params.kappa_phi.real
    re_psi = ((params.gamma - params.alpha)
              / (params.gamma + params.alpha)).real
    phi_ok = re_phi > 0.0
    psi_ok = re_psi > 0.0
    return NormalizabilityReport(
        phi0_in_H=phi_ok,
        psi0_in_H=psi_ok,
        scenario=_SCENARIOS[(phi_ok, psi_ok)],
        re_phi_exponent=re_phi,
        re_psi_exponent=re_psi,
    )


def swanson(theta) -> GbtParams:
    """The complex one-parameter family beta = gamma = cos(theta), delta = alpha = -i sin(theta).

    The determinant is cos^2 + sin^2 = 1 automatically and both ground-state
    exponents have real part cos(2 theta) > 0 on the allowed interval, so the
    family always sits in scenario D.
    """
    if not isinstance(theta, SwansonParams):
        theta = SwansonParams(theta)
    c, s = math.cos(theta.theta), math.sin(theta.theta)
    return GbtParams(alpha=-1j * s, beta=c, gamma=c, delta=-1j * s)


def constrained_family(beta: float, delta: float) -> GbtParams:
    """Two-parameter real family with alpha*beta = gamma*delta.

    Unit determinant plus the constraint eliminate gamma = beta/(beta^2-delta^2)
    and alpha = delta/(beta^2-delta^2); requires beta > delta > 0, which also
    forces gamma > alpha > 0.
    """
    beta, delta = float(beta), float(delta)
    if not (beta > delta > 0):
        raise OrderingError(
            f"constrained family needs beta > delta > 0, got ({beta}, {delta})"
        )
    u = beta * beta - delta * delta
    return GbtParams(alpha=delta / u, beta=beta, gamma=beta / u, delta=delta)


def anomaly(params: GbtParams) -> complex:
    """alpha*beta - gamma*delta, whose vanishing separates bases from quasi-bases.

    Also asserts the determinant identity
    (beta^2-delta^2)(gamma^2-alpha^2) = 1 - (alpha*beta-gamma*delta)^2
    as a side check.
    """
    validate(params)
    a = params.alpha * params.beta - params.gamma * params.delta
    lhs = ((params.beta ** 2 - params.delta ** 2)
           * (params.gamma ** 2 - params.alpha ** 2))
    rhs = 1.0 - a * a
    if abs(lhs - rhs) > IDENTITY_TOL * max(1.0, abs(lhs)):
        raise PseudoBosonError(
            f"determinant identity violated: {lhs} vs {rhs}"
        )
    return a
