"""
Quasi-subordination triples, inequality checks and sharpness witnesses.

f is quasi-subordinate to g relative to Phi when f = Phi * (g o omega) with
|Phi| <= 1 and omega a Schwarz function. Phi = 1 is ordinary subordination,
omega(z) = z is majorization. The checks here compare both sides of the
refined Bohr inequalities, each side carrying the certified tails of the
series it was summed from.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from .bohr_functionals import (
    distance_form_T,
    full_norm_sq,
    half_plane_excess,
    majorant,
    norm_sq,
    refined_weight,
)
from .errors import BracketError, DomainError
from .function_library import (
    CanonicalFamily,
    FamilyTag,
    half_plane_map,
    koebe,
    moebius_phi_a,
    random_schwarz,
    random_unit_bounded,
)
from .radius_solvers import (
    bisect_root,
    classical_bohr_radius,
    p_family_radius,
    solve_r0,
    solve_r0_for_distance,
    solve_rg,
)
from .series_core import CauchyBound, TruncatedSeries, Unknown, compose, multiply, one_series, scale
from .state import RadialEvalReport, RadiusResult, VerificationRecord, WitnessReport

logger = logging.getLogger(__name__)

COMPARISON_TOL = 1e-12
DEFAULT_CAUCHY_RADIUS = 0.98
WITNESS_TOL = 1e-13
WITNESS_ORDER = 256
GRID_POINTS = 400

TRIPLE_FAMILIES = ("unit_bounded", "half_plane", "koebe")


@dataclass(frozen=True)
class QuasiSubTriple:
    """f = Phi * (g o omega) together with its ingredients."""
    phi: TruncatedSeries
    omega: TruncatedSeries
    g: TruncatedSeries
    f: TruncatedSeries

    @property
    def phi0(self) -> complex:
        return self.phi[0]

    @property
    def is_subordination(self) -> bool:
        return self.phi.coeffs[0] == 1.0 and not np.any(self.phi.coeffs[1:])


def build_quasi(
    phi: TruncatedSeries,
    omega: TruncatedSeries,
    g: TruncatedSeries,
    cauchy_radius: float = DEFAULT_CAUCHY_RADIUS,
) -> QuasiSubTriple:
    """Form f = Phi * (g o omega) and attach a certified growth class to it."""
    f = multiply(phi, compose(g, omega))
    expected = phi.coeffs[0] * g.coeffs[0]
    if abs(f.coeffs[0] - expected) > 4.0 * np.finfo(float).eps * max(1.0, abs(expected)):
        raise DomainError("constant term of f differs from Phi(0) * g(0)")

    if isinstance(f.growth, Unknown):
        f = _with_cauchy_growth(f, phi, omega, g, cauchy_radius)
    return QuasiSubTriple(phi=phi, omega=omega, g=g, f=f)


def _with_cauchy_growth(
    f: TruncatedSeries,
    phi: TruncatedSeries,
    omega: TruncatedSeries,
    g: TruncatedSeries,
    cauchy_radius: float,
) -> TruncatedSeries:
    # |f(z)| <= max_{|w| <= |z|} |g(w)| <= M_g(|z|) needs |Phi| <= 1 and a Schwarz omega.
    if phi.sup_bound is None or phi.sup_bound > 1.0 or omega.sup_bound is None or omega.sup_bound > 1.0:
        logger.warning("Phi or omega carries no modulus bound; f keeps unknown growth")
        return f
    bound = majorant(g, cauchy_radius).upper
    if not math.isfinite(bound):
        return f
    return f.with_growth(CauchyBound(M=bound, radius=cauchy_radius))


def random_triple(
    seed: int,
    order: int = 128,
    max_depth: int = 3,
    family: str = "unit_bounded",
    subordinate: bool = False,
    cauchy_radius: float = DEFAULT_CAUCHY_RADIUS,
) -> QuasiSubTriple:
    """A reproducible triple; ``subordinate`` fixes Phi = 1."""
    rng = np.random.default_rng(seed)
    phi_seed, omega_seed, g_seed = (int(s) for s in rng.integers(0, 2 ** 31, size=3))
    phi_depth = int(rng.integers(1, max_depth + 1))
    omega_depth = int(rng.integers(0, max_depth + 1))

    if family == "unit_bounded":
        g = random_unit_bounded(g_seed, order, int(rng.integers(1, max_depth + 1)))
    elif family == "half_plane":
        g = half_plane_map(float(rng.uniform(0.05, 0.95)), order)
    elif family == "koebe":
        g = koebe(order)
    else:
        raise DomainError(f"unknown triple family {family!r}")

    phi = one_series(order) if subordinate else random_unit_bounded(phi_seed, order, phi_depth)
    omega = random_schwarz(omega_seed, order, omega_depth)
    return build_quasi(phi, omega, g, cauchy_radius)


def _combine(r: float, order: int, *parts) -> RadialEvalReport:
    """Weighted sum of (weight, report) pairs with tails combined the same way."""
    value = sum(weight * report.value for weight, report in parts)
    tail = sum(weight * report.tail for weight, report in parts)
    return RadialEvalReport(r=r, value=value, tail=tail, order_used=order)


def make_record(
    label: str,
    lhs: RadialEvalReport,
    rhs: RadialEvalReport,
    r: float,
    tol: float = COMPARISON_TOL,
    exploratory: bool = False,
) -> VerificationRecord:
    passed = lhs.value <= rhs.value + lhs.tail + rhs.tail + tol
    if not (lhs.certified and rhs.certified):
        logger.warning("%s at r=%g compared with an unbounded tail", label, r)
    return VerificationRecord(
        label=label,
        lhs=lhs,
        rhs=rhs,
        r=r,
        passed=passed,
        margin=rhs.value - lhs.value,
        exploratory=exploratory,
    )


def verify_functional_bound(
    label: str,
    report: RadialEvalReport,
    bound: float,
    tol: float = COMPARISON_TOL,
) -> VerificationRecord:
    """report <= bound, the bound being an exact constant."""
    rhs = RadialEvalReport(r=report.r, value=bound, tail=0.0, order_used=report.order_used)
    return make_record(label, report, rhs, report.r, tol)


def _check_lemma_radius(r: float, exploratory: bool) -> None:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    if r > classical_bohr_radius() and not exploratory:
        raise DomainError(f"the lemma is stated for r <= 1/3, got {r}; pass exploratory=True to probe")
    if r > classical_bohr_radius():
        logger.info("exploratory probe at r=%g beyond 1/3", r)


def _refined_side(f: TruncatedSeries, r: float, weight_a0: float) -> RadialEvalReport:
    weight = refined_weight(weight_a0, r)
    return _combine(r, f.order, (1.0, majorant(f, r)), (weight, norm_sq(f, r)))


def verify_lemma1(
    t: QuasiSubTriple,
    r: float,
    exploratory: bool = False,
    tol: float = COMPARISON_TOL,
) -> VerificationRecord:
    """M_f + w(|a_0|) ||f_0|| <= M_g + w(|b_0 Phi_0|)(|b_0|^2 (1 - |Phi_0|^2) + ||g_0||)."""
    _check_lemma_radius(r, exploratory)
    lhs = _refined_side(t.f, r, abs(t.f[0]))

    b0 = abs(t.g[0])
    phi0 = abs(t.phi0)
    weight = refined_weight(abs(t.g[0] * t.phi0), r)
    g_norm = norm_sq(t.g, r)
    shifted = RadialEvalReport(
        r=r, value=b0 * b0 * (1.0 - phi0 * phi0) + g_norm.value, tail=g_norm.tail, order_used=t.g.order
    )
    rhs = _combine(r, t.g.order, (1.0, majorant(t.g, r)), (weight, shifted))
    return make_record("lemma1", lhs, rhs, r, tol, exploratory=r > classical_bohr_radius())


def verify_lemma2(
    t: QuasiSubTriple,
    r: float,
    exploratory: bool = False,
    tol: float = COMPARISON_TOL,
) -> VerificationRecord:
    """Subordination form: both sides weighted by 1/(1 + |a_0|)."""
    if not t.is_subordination:
        raise DomainError("Lemma 2 needs Phi identically 1")
    _check_lemma_radius(r, exploratory)
    a0 = abs(t.f[0])
    lhs = _refined_side(t.f, r, a0)
    rhs = _refined_side(t.g, r, a0)
    return make_record("lemma2", lhs, rhs, r, tol, exploratory=r > classical_bohr_radius())


def verify_majorant_domination(t: QuasiSubTriple, r: float, tol: float = COMPARISON_TOL) -> VerificationRecord:
    """M_f(r) <= M_g(r) for r <= 1/3."""
    _check_lemma_radius(r, exploratory=False)
    return make_record("majorant_domination", majorant(t.f, r), majorant(t.g, r), r, tol)


def verify_rogosinski(t: QuasiSubTriple, r: float, tol: float = COMPARISON_TOL) -> VerificationRecord:
    """||f||_r <= ||g||_r including the constant terms; valid on all of [0, 1)."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    return make_record("rogosinski", full_norm_sq(t.f, r), full_norm_sq(t.g, r), r, tol)


def verify_rogosinski_shifted(t: QuasiSubTriple, r: float, tol: float = COMPARISON_TOL) -> VerificationRecord:
    """||f_0||_r <= |b_0|^2 (1 - |Phi_0|^2) + ||g_0||_r."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    b0 = abs(t.g[0])
    phi0 = abs(t.phi0)
    g_norm = norm_sq(t.g, r)
    rhs = RadialEvalReport(
        r=r, value=b0 * b0 * (1.0 - phi0 * phi0) + g_norm.value, tail=g_norm.tail, order_used=t.g.order
    )
    return make_record("rogosinski_shifted", norm_sq(t.f, r), rhs, r, tol)


def convex_bound_check(g: TruncatedSeries, lam: float, rtol: float = 0.0) -> bool:
    """|b_n| <= 2 lambda for n >= 1, the coefficient bound of a convex image."""
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam}")
    bound = 2.0 * lam * (1.0 + rtol)
    return bool(np.all(np.abs(g.coeffs[1:]) <= bound))


def univalent_bound_check(g: TruncatedSeries, lam: float, rtol: float = 0.0) -> bool:
    """|b_n| <= 4 n lambda for n >= 1, the coefficient bound of a univalent image."""
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam}")
    n = np.arange(1, g.order + 1)
    return bool(np.all(np.abs(g.coeffs[1:]) <= 4.0 * n * lam * (1.0 + rtol)))


def _first_crossing(
    excess: Callable[[float], float],
    lo: float,
    hi: float,
    name: str,
    tol: float = WITNESS_TOL,
):
    """Bisect the first grid cell where ``excess`` turns positive."""
    grid = np.linspace(lo, hi, GRID_POINTS)
    previous = float(grid[0])
    if excess(previous) > 0.0:
        raise BracketError(f"{name}: expression already exceeds its bound at r={previous}")
    for point in grid[1:]:
        point = float(point)
        if excess(point) > 0.0:
            return bisect_root(excess, previous, point, tol=tol, name=name)
        previous = point
    raise BracketError(f"{name}: no crossing on [{lo}, {hi}]")


def _witness_report(crossing: RadiusResult, **fields: Any) -> WitnessReport:
    return WitnessReport(
        threshold_found=crossing.value,
        bracket_lo=crossing.bracket_lo,
        bracket_hi=crossing.bracket_hi,
        residual=crossing.residual,
        iterations=crossing.iterations,
        **fields,
    )


def p_family_witness_expression(a: float, p: float, r: float) -> float:
    """1 - a + a^p + (1 - a)((2 + a) r - 1)/(1 - r), the p-refined functional of phi_a."""
    return 1.0 - a + a ** p + (1.0 - a) * ((2.0 + a) * r - 1.0) / (1.0 - r)


def sharpness_witness_thmB(a: float, p: float = 1.0, tol: float = WITNESS_TOL) -> WitnessReport:
    """The expression exceeds 1 exactly for r > (1 - a^p)/(2 - a^2 - a^p)."""
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    if not 0.0 < p <= 2.0:
        raise DomainError(f"p must lie in (0, 2], got {p}")
    crossing = _first_crossing(
        lambda r: p_family_witness_expression(a, p, r) - 1.0, 0.0, 0.99, "witness_thmB", tol
    )
    return _witness_report(
        crossing,
        family=CanonicalFamily(FamilyTag.MOEBIUS_PHI_A, a).describe(),
        parameter=a,
        p=p,
        threshold_predicted=p_family_radius(a, p),
    )


def witness_theorem_a(a: float, order: int = WITNESS_ORDER, tol: float = WITNESS_TOL) -> WitnessReport:
    """First r where the majorant of phi_a exceeds 1; it equals 1/(1 + 2a)."""
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    predicted = 1.0 / (1.0 + 2.0 * a)
    f = moebius_phi_a(a, order)
    # Halfway between the predicted radius and 1 keeps the scan inside the disk.
    hi = max(0.999, 0.5 * (predicted + 1.0))
    crossing = _first_crossing(lambda r: majorant(f, r).value - 1.0, 0.0, hi, "witness_thmA", tol)
    return _witness_report(
        crossing,
        family=CanonicalFamily(FamilyTag.MOEBIUS_PHI_A, a).describe(),
        parameter=a,
        threshold_predicted=predicted,
    )


def witness_theorem1(a0: float, tol: float = WITNESS_TOL) -> WitnessReport:
    """First r where S_g of the half-plane map exceeds 1, against r_0(a_0)."""
    if not 0.0 < a0 < 1.0:
        raise DomainError(f"a0 must lie in (0, 1), got {a0}")
    lam = 1.0 - a0
    crossing = _first_crossing(
        lambda r: half_plane_excess(lam, r), 0.0, 0.5, "witness_thm1", tol
    )
    return _witness_report(
        crossing,
        family=CanonicalFamily(FamilyTag.HALF_PLANE, a0).describe(),
        parameter=a0,
        threshold_predicted=solve_r0(a0).value,
    )


def witness_theorem2(lam: float, order: int = WITNESS_ORDER, tol: float = WITNESS_TOL) -> WitnessReport:
    """First r where T_g of the half-plane map with distance lambda exceeds lambda."""
    if not 0.0 < lam < 1.0:
        raise DomainError(f"lambda must lie in (0, 1), got {lam}")
    g = half_plane_map(1.0 - lam, order)
    crossing = _first_crossing(
        lambda r: distance_form_T(g, r, lam).value - lam, 0.0, 0.5, "witness_thm2", tol
    )
    return _witness_report(
        crossing,
        family=CanonicalFamily(FamilyTag.HALF_PLANE, 1.0 - lam).describe(),
        parameter=lam,
        threshold_predicted=solve_r0_for_distance(lam).value,
    )


def witness_theorem3(order: int = WITNESS_ORDER, tol: float = WITNESS_TOL) -> WitnessReport:
    """T_g for g = 4 * koebe (distance 1) first exceeds 1 at r_g."""
    g = scale(koebe(order), 4.0)
    crossing = _first_crossing(
        lambda r: distance_form_T(g, r, 1.0).value - 1.0, 0.0, 0.5, "witness_thm3", tol
    )
    return _witness_report(
        crossing,
        family=CanonicalFamily(FamilyTag.KOEBE).describe(),
        parameter=1.0,
        threshold_predicted=solve_rg().value,
    )


def exploratory_lemma_radius(
    t: QuasiSubTriple,
    hi: float = 0.9,
    tol: float = 1e-9,
) -> Optional[float]:
    """Empirical first r > 1/3 where Lemma 1 fails for this triple, if any on the scan."""
    def excess(r: float) -> float:
        record = verify_lemma1(t, r, exploratory=True)
        return record.lhs.value - record.rhs.value

    try:
        return _first_crossing(excess, classical_bohr_radius(), hi, "lemma1_exploratory", tol).value
    except BracketError:
        return None
