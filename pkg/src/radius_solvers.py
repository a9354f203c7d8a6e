"""
Exact radii and certified bisection for the radius equations.

Phi(lambda, r) governs the half-plane and convex cases, Psi(lambda, r) the
univalent case. Roots are always found by bisection inside a bracket whose
endpoint signs are asserted at runtime; the returned ``RadiusResult`` carries
the final bracket and the residual at the reported value.
"""

import logging
import math
from typing import Callable, Dict

import numpy as np

from .errors import BracketError, DomainError
from .state import RadiusResult

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 200

RSTAR_BRACKET = (0.2, 0.3)
RG_BRACKET = (0.1, 0.15)


def rstar_polynomial(r: float) -> float:
    """3r^3 - 5r^2 - 3r + 1, which equals Phi(1, r)."""
    return ((3.0 * r - 5.0) * r - 3.0) * r + 1.0


def rg_polynomial(r: float) -> float:
    """(1 - 6r + r^2)(1 - r)^2(1 + r)^3 - 16 r^2 (1 + r^2), which equals Psi(1, r)."""
    return _psi_base(r) - 16.0 * r * r * (1.0 + r * r)


def _psi_base(r: float) -> float:
    return (1.0 - 6.0 * r + r * r) * (1.0 - r) ** 2 * (1.0 + r) ** 3


def phi_poly(lam: float, r: float) -> float:
    r2 = r * r
    r3 = r2 * r
    return 4.0 * r3 * lam * lam - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0) * lam + 6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0


def psi_poly(lam: float, r: float) -> float:
    base = _psi_base(r)
    r2 = r * r
    return (
        16.0 * lam * lam * r2 * r * (1.0 + r2)
        - lam * (base + 16.0 * r2 * (1.0 + r) * (1.0 + r2))
        + 2.0 * base
    )


def phi_partial_lambda(lam: float, r: float) -> float:
    r2 = r * r
    r3 = r2 * r
    return 8.0 * r3 * lam - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0)


def phi_partial_r(lam: float, r: float) -> float:
    return 12.0 * r * r * lam * lam - (21.0 * r * r + 6.0 * r - 3.0) * lam + 18.0 * r * r - 4.0 * r - 6.0


def psi_partial_lambda(lam: float, r: float) -> float:
    r2 = r * r
    return 32.0 * lam * r2 * r * (1.0 + r2) - (_psi_base(r) + 16.0 * r2 * (1.0 + r) * (1.0 + r2))


def a_of_x(x: float, p: float) -> float:
    """A(x) = -p - (2 - p) x^2 + 2 x^(2 - p); the p-family radius decreases because A <= 0."""
    return -p - (2.0 - p) * x * x + 2.0 * x ** (2.0 - p)


def bisect_root(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    name: str = "root",
) -> RadiusResult:
    """Bisection inside [lo, hi]; requires a strict sign change at the endpoints."""
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    f_lo, f_hi = func(lo), func(hi)
    for endpoint, value in ((lo, f_lo), (hi, f_hi)):
        if value == 0.0:
            logger.debug("%s = %.17g is an exact zero at the bracket endpoint", name, endpoint)
            return RadiusResult(
                name=name,
                value=endpoint,
                bracket_lo=endpoint,
                bracket_hi=endpoint,
                residual=0.0,
                iterations=0,
            )
    if not (f_lo < 0.0 < f_hi or f_hi < 0.0 < f_lo):
        raise BracketError(f"{name}: no sign change on [{lo}, {hi}] (values {f_lo}, {f_hi})")

    iterations = 0
    while hi - lo > tol and iterations < MAX_ITERATIONS:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        f_mid = func(mid)
        if f_mid != 0.0 and (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        iterations += 1

    value = 0.5 * (lo + hi)
    residual = func(value)
    logger.debug("%s = %.17g after %d iterations, residual %.3e", name, value, iterations, residual)
    return RadiusResult(
        name=name,
        value=value,
        bracket_lo=lo,
        bracket_hi=hi,
        residual=residual,
        iterations=iterations,
    )


def classical_bohr_radius() -> float:
    return 1.0 / 3.0


def refined_radius(a0: float) -> float:
    """1/(2 + |a_0|), the radius of the refined inequality for unit-bounded f."""
    if not 0.0 <= a0 < 1.0:
        raise DomainError(f"a0 must lie in [0, 1), got {a0}")
    return 1.0 / (2.0 + a0)


def p_family_radius(a0: float, p: float) -> float:
    """(1 - a0^p)/(2 - a0^2 - a0^p), the radius when |a_0| is replaced by |a_0|^p."""
    if not 0.0 <= a0 < 1.0:
        raise DomainError(f"a0 must lie in [0, 1), got {a0}")
    if not 0.0 < p <= 2.0:
        raise DomainError(f"p must lie in (0, 2], got {p}")
    power = a0 ** p
    return (1.0 - power) / (2.0 - a0 * a0 - power)


def p_family_infimum(p: float) -> float:
    """Limit of the p-family radius as a0 -> 1-."""
    if not 0.0 < p <= 2.0:
        raise DomainError(f"p must lie in (0, 2], got {p}")
    return p / (2.0 + p)


def rstar_bisect(tol: float = DEFAULT_TOL) -> RadiusResult:
    return bisect_root(rstar_polynomial, *RSTAR_BRACKET, tol=tol, name="rstar")


def rstar_cardano() -> float:
    """Trigonometric Cardano form of the root of 3r^3 - 5r^2 - 3r + 1 in (0, 1)."""
    theta = math.atan(9.0 * math.sqrt(303.0) / 103.0) / 3.0
    return (
        5.0 / 9.0
        - 2.0 / 9.0 * math.sqrt(13.0) * math.cos(theta)
        + 2.0 / 3.0 * math.sqrt(13.0 / 3.0) * math.sin(theta)
    )


def solve_r0_for_distance(lam: float, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Root of Phi(lambda, .) in (r*, 1/3]; lambda = 1 gives r* itself."""
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must lie in (0, 1], got {lam}")
    if lam == 1.0:
        return bisect_root(rstar_polynomial, *RSTAR_BRACKET, tol=tol, name="r0")
    return bisect_root(lambda r: phi_poly(lam, r), rstar_cardano(), 1.0 / 3.0, tol=tol, name="r0")


def solve_r0(a0: float, tol: float = DEFAULT_TOL) -> RadiusResult:
    """r_0(a_0): root of Phi(1 - a_0, .), which increases from r* to 1/3 as a_0 runs over (0, 1)."""
    if not 0.0 < a0 < 1.0:
        raise DomainError(f"a0 must lie in (0, 1), got {a0}")
    return solve_r0_for_distance(1.0 - a0, tol)


def lambda_of_r(r: float) -> float:
    """The unique lambda in (0, 1) with Phi(lambda, r) = 0, for r* < r < 1/3."""
    if not rstar_cardano() < r < 1.0 / 3.0:
        raise DomainError(f"r must lie in (r*, 1/3), got {r}")
    r2 = r * r
    r3 = r2 * r
    a = 4.0 * r3
    b = -(7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0)
    c = 6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0
    discriminant = b * b - 4.0 * a * c
    if discriminant < 0.0:
        raise BracketError(f"Phi(., {r}) has no real root")

    q = -0.5 * (b + math.copysign(math.sqrt(discriminant), b))
    roots = (q / a, c / q)
    inside = [root for root in roots if 0.0 <= root <= 1.0]
    if len(inside) != 1:
        raise BracketError(f"expected exactly one root of Phi(., {r}) in [0, 1], got {roots}")
    return inside[0]


def solve_rg(tol: float = DEFAULT_TOL) -> RadiusResult:
    return bisect_root(rg_polynomial, *RG_BRACKET, tol=tol, name="rg")


def _relative_error(lhs: np.ndarray, rhs: np.ndarray, size: float = 1.0) -> float:
    """Discrepancy measured against the larger of 1, |rhs| and the size of the summed terms."""
    return float(np.max(np.abs(lhs - rhs) / np.maximum(np.maximum(1.0, size), np.abs(rhs))))


def identity_errors(points: int = 1000) -> Dict[str, float]:
    """Largest scaled discrepancy of each polynomial identity on an r-grid in (0, 1)."""
    r = np.linspace(0.0, 1.0, points + 2)[1:-1]
    r2 = r * r
    phi = np.vectorize(phi_poly)
    psi = np.vectorize(psi_poly)
    d_phi = np.vectorize(phi_partial_lambda)
    d_psi = np.vectorize(psi_partial_lambda)
    expanded = 1.0 - 4.0 * r + 5.0 * r2 + 27.0 * r2 * r2 + 4.0 * r2 * r2 * r - r2 * r2 * r2
    factored = r2 * r2 * r * (1.0 - r) + r2 + 27.0 * r2 * r2 + 3.0 * r2 * r2 * r + (2.0 * r - 1.0) ** 2
    psi_terms = 16.0 * r2 * (1.0 + r) * (1.0 + r2) + np.abs(np.vectorize(_psi_base)(r))
    return {
        "phi_at_lambda_0": _relative_error(phi(0.0, r), 2.0 * (1.0 - 3.0 * r) * (1.0 - r2)),
        "phi_at_lambda_1": _relative_error(phi(1.0, r), np.vectorize(rstar_polynomial)(r)),
        "phi_partial_lambda_at_1": _relative_error(d_phi(1.0, r), -(1.0 - r) ** 3),
        "psi_at_lambda_1": _relative_error(psi(1.0, r), np.vectorize(rg_polynomial)(r), psi_terms),
        "psi_partial_lambda_at_1": _relative_error(d_psi(1.0, r), -(1.0 - r) * factored, psi_terms),
        "psi_partial_lambda_expanded": _relative_error(factored, expanded),
    }


def monotonicity_violations(points: int = 50) -> Dict[str, int]:
    """Grid counts of sign conditions that make the radius maps monotone; all should be 0."""
    lam = np.linspace(0.02, 1.0, points)
    r = np.linspace(0.02, 0.98, points)
    partial_gap = [
        phi_partial_lambda(float(l), float(x)) - phi_partial_lambda(1.0, float(x)) for l in lam for x in r
    ]
    # Phi decreases in r on the band where r0 lives, so lambda_of_r is well defined.
    band = np.linspace(rstar_cardano(), 1.0 / 3.0, points)
    interior = lam[lam < 1.0]
    slopes = [phi_partial_r(float(l), float(x)) for l in interior for x in band]
    a0_grid = np.linspace(0.01, 0.99, points)
    r0_values = [solve_r0(float(a0)).value for a0 in a0_grid]
    counts = {
        "phi_partial_lambda_above_edge": sum(1 for gap in partial_gap if gap > 1e-14),
        "phi_partial_r_nonnegative": sum(1 for slope in slopes if slope >= 0.0),
        "r0_not_increasing": sum(1 for lo, hi in zip(r0_values, r0_values[1:]) if not lo < hi),
    }
    x = np.linspace(0.0, 1.0, points)
    for p in (0.5, 1.0, 1.5, 2.0):
        radii = [p_family_radius(float(a), p) for a in a0_grid]
        counts[f"a_of_x_positive_p{p:g}"] = sum(1 for v in x if a_of_x(float(v), p) > 1e-14)
        counts[f"pfamily_increasing_p{p:g}"] = sum(
            1 for lo, hi in zip(radii, radii[1:]) if hi > lo + 1e-15
        )
    return counts
