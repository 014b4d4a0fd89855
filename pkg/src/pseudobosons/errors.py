"""Exception types shared across the package."""


class PseudoBosonError(Exception):
    """Base class for all package-specific failures."""


class DeterminantError(PseudoBosonError):
    """Transformation matrix does not have unit determinant."""

    def __init__(self, det):
        self.det = det
        super().__init__(
            f"transformation determinant beta*gamma - alpha*delta = {det} "
            f"differs from 1 beyond tolerance"
        )


class DegenerateExponentError(PseudoBosonError):
    """beta + delta = 0 or gamma + alpha = 0: ground-state exponents undefined."""


class OrderingError(PseudoBosonError):
    """Constrained two-parameter family requires beta > delta > 0."""


class NotPseudoBosonicError(PseudoBosonError):
    """At least one ground state is not square-integrable (scenario A/B/C)."""

    def __init__(self, scenario, failing):
        self.scenario = scenario
        self.failing = tuple(failing)
        names = " and ".join(self.failing)
        super().__init__(
            f"scenario {scenario}: {names} not square-integrable"
        )


class UseOracleError(PseudoBosonError):
    """Closed forms are gated to real ordered parameters; use the quadrature oracle."""


class NonIntegrableError(PseudoBosonError):
    """Requested integral has a non-decaying Gaussian factor."""


class NonDecayingIntegrandError(PseudoBosonError):
    """Sampled integrand magnitude at the truncation boundary is too large."""
