"""Domain membership, weak resolution-of-identity partial sums, and verdicts.

The domain D consists of square-integrable f with e^{x^2 t/2} f still
square-integrable, t = |alpha*beta - gamma*delta|; for a GaussPoly that is
exactly the strict inequality Re(kappa) > t. The partial sums
S_N = sum_{n<=N} <f, phi_n><Psi_n, g> (or with the families swapped) are the
numerical face of the quasi-basis identity: for f, g in D they have to
converge to <f, g>.

The final classification of a parameter set is deterministic in (scenario,
anomaly, x, y); complex parameter sets fall outside the real-ordered
closed-form regime and get an explicitly undetermined verdict carrying
oracle evidence instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigensystem import (
    EigenFamily,
    build_family,
    inner_with_phi,
    inner_with_psi,
)
from .errors import NonIntegrableError
from .gausspoly import GaussPoly, inner_product
from .gbt import GbtParams, NormalizabilityReport, anomaly, normalizability
from .norms import ANOMALY_ZERO_TOL, BOUNDED_TOL, AsymptoticsReport, asymptotics

NOT_PSEUDO_BOSONIC = "NOT_PSEUDO_BOSONIC"
RIESZ_LIKE_COLLAPSE = "RIESZ_LIKE_COLLAPSE"
BIORTHOGONAL_BASES_NOT_RIESZ = "BIORTHOGONAL_BASES_NOT_RIESZ"
QUASI_BASES_ONLY = "QUASI_BASES_ONLY"
UNDETERMINED_CLOSED_FORM = "UNDETERMINED_CLOSED_FORM"

__all__ = [
    "DomainSpec",
    "QuasiBasisCheck",
    "BasisVerdict",
    "domain_spec_for",
    "domain_membership",
    "partial_sums",
    "verdict",
    "NOT_PSEUDO_BOSONIC",
    "RIESZ_LIKE_COLLAPSE",
    "BIORTHOGONAL_BASES_NOT_RIESZ",
    "QUASI_BASES_ONLY",
    "UNDETERMINED_CLOSED_FORM",
]


@dataclass(frozen=True)
class DomainSpec:
    """Membership weight: e^{x^2 weight_exponent / 2} f must stay in L^2."""

    weight_exponent: float

    def __post_init__(self):
        w = float(self.weight_exponent)
        object.__setattr__(self, "weight_exponent", w)
        if not 0.0 <= w < 1.0:
            raise ValueError(
                f"weight exponent must lie in [0, 1), got {w}"
            )


def domain_spec_for(params: GbtParams) -> DomainSpec:
    return DomainSpec(abs(anomaly(params)))


def domain_membership(f: GaussPoly, spec: DomainSpec) -> bool:
    """For a GaussPoly membership is exactly Re(kappa) > weight, strictly.

    Boundary functions (equality) are outside: the weighted function is then a
    polynomial times a pure phase, not square-integrable.
    """
    return f.kappa.real > spec.weight_exponent


@dataclass(frozen=True)
class QuasiBasisCheck:
    f: object
    g: object
    partial_sums: tuple
    target: complex
    converged: bool
    final_error: float
    ordering: str
    tolerance: float


def _pair_terms(family: EigenFamily, f, g, n: int, ordering: str) -> complex:
    from .oracle import quad_inner

    f_gp = isinstance(f, GaussPoly)
    g_gp = isinstance(g, GaussPoly)
    if ordering == "phi_first":
        left_fam, right_fam = family.phi, family.psi
        left_exact, right_exact = inner_with_phi, inner_with_psi
    else:
        left_fam, right_fam = family.psi, family.phi
        left_exact, right_exact = inner_with_psi, inner_with_phi
    left = (left_exact(family, f, n) if f_gp
            else quad_inner(f, left_fam[n]).value)
    right = (right_exact(family, g, n).conjugate() if g_gp
             else quad_inner(right_fam[n], g).value)
    return left * right


def partial_sums(family: EigenFamily, f, g, n_max: int,
                 ordering: str = "phi_first",
                 tolerance: float = 1e-6) -> QuasiBasisCheck:
    """S_N for N = 0..n_max against the target <f, g>.

    GaussPoly arguments pair with the family through the exact moment path;
    plain callables go through oracle quadrature. A non-integrable pairing
    reports the index n at which it occurred.
    """
    if n_max > family.n_max:
        raise ValueError("family was not built to the requested n_max")
    if ordering not in ("phi_first", "psi_first"):
        raise ValueError(f"unknown ordering {ordering!r}")
    from .oracle import quad_inner

    if isinstance(f, GaussPoly) and isinstance(g, GaussPoly):
        target = inner_product(f, g)
    else:
        target = quad_inner(f, g).value
    sums = []
    acc = 0.0j
    for n in range(n_max + 1):
        try:
            acc = acc + _pair_terms(family, f, g, n, ordering)
        except NonIntegrableError as exc:
            raise NonIntegrableError(
                f"pairing with family member n={n} failed: {exc}"
            ) from exc
        sums.append(acc)
    final_error = abs(sums[-1] - target)
    return QuasiBasisCheck(
        f=f, g=g, partial_sums=tuple(sums), target=target,
        converged=final_error <= tolerance, final_error=final_error,
        ordering=ordering, tolerance=tolerance)


@dataclass(frozen=True)
class BasisVerdict:
    kind: str
    rationale_codes: tuple
    evidence: dict | None = None


def _oracle_evidence(params: GbtParams, n_max: int) -> dict:
    from .oracle import quad_norm_series

    family = build_family(params, n_max)
    phi_series, psi_series = quad_norm_series(family)
    phi_log = [v.log_abs for v in phi_series.values]
    psi_log = [v.log_abs for v in psi_series.values]
    lo = min(5, n_max)
    return {
        "n_max": n_max,
        "phi_log_norm_sq": phi_log,
        "psi_log_norm_sq": psi_log,
        "phi_increasing_from_5": all(
            phi_log[k + 1] > phi_log[k] for k in range(lo, n_max)),
        "psi_increasing_from_5": all(
            psi_log[k + 1] > psi_log[k] for k in range(lo, n_max)),
        "source": "oracle",
    }


def verdict(params: GbtParams,
            norm_report: NormalizabilityReport | None = None,
            asym: AsymptoticsReport | None = None,
            evidence_n_max: int = 40) -> BasisVerdict:
    """Classify the parameter set from (scenario, anomaly, x, y) alone.

    Scenarios A/B/C are not pseudo-bosonic at all. In scenario D with real
    ordered parameters: zero anomaly with x = y = 1 is the standard-Bogoliubov
    collapse (a Riesz-like pair), zero anomaly with unbalanced growth gives
    biorthogonal bases that cannot be Riesz bases, nonzero anomaly leaves
    quasi bases on the restricted domain only. Complex parameter sets return
    UNDETERMINED_CLOSED_FORM with oracle norm evidence attached.
    """
    if norm_report is None:
        norm_report = normalizability(params)
    if norm_report.scenario != "D":
        codes = [f"SCENARIO_{norm_report.scenario}"]
        if not norm_report.phi0_in_H:
            codes.append("PHI0_NOT_IN_L2")
        if not norm_report.psi0_in_H:
            codes.append("PSI0_NOT_IN_L2")
        return BasisVerdict(NOT_PSEUDO_BOSONIC, tuple(codes))
    if not params.is_real_ordered:
        return BasisVerdict(
            UNDETERMINED_CLOSED_FORM,
            ("SCENARIO_D", "COMPLEX_PARAMETERS", "ORACLE_EVIDENCE_ONLY"),
            evidence=_oracle_evidence(params, evidence_n_max))
    if asym is None:
        asym = asymptotics(params)
    t = abs(anomaly(params))
    if t <= ANOMALY_ZERO_TOL:
        balanced = (abs(asym.x - 1.0) <= BOUNDED_TOL
                    and abs(asym.y - 1.0) <= BOUNDED_TOL)
        if balanced:
            return BasisVerdict(
                RIESZ_LIKE_COLLAPSE,
                ("SCENARIO_D", "ANOMALY_ZERO", "NORM_PRODUCT_CONSTANT",
                 "BOTH_NORMS_BOUNDED"))
        return BasisVerdict(
            BIORTHOGONAL_BASES_NOT_RIESZ,
            ("SCENARIO_D", "ANOMALY_ZERO", "NORM_PRODUCT_CONSTANT",
             "NORMS_UNBALANCED"))
    return BasisVerdict(
        QUASI_BASES_ONLY,
        ("SCENARIO_D", "ANOMALY_NONZERO", "NORM_PRODUCT_DIVERGES",
         "DOMAIN_RESTRICTED"))
