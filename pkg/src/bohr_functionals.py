"""
Bohr-type functionals of a truncated series at radius r.

Every function returns a ``RadialEvalReport``: the partial sum over the stored
coefficients and a bound on the omitted tail taken from the series' growth
class. A series with unknown growth reports an infinite tail; callers that
need a verdict must treat such a report as uncertified.
"""

import logging
import math

import numpy as np

from .errors import DomainError
from .radius_solvers import phi_poly, psi_poly
from .series_core import TruncatedSeries
from .state import RadialEvalReport

logger = logging.getLogger(__name__)


def _check_radius(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")


def _check_distance(lam: float) -> None:
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"distance lambda must lie in (0, 1], got {lam}")


def _power_sum(weights: np.ndarray, x: float, start: int) -> float:
    """sum_{n >= start} weights[n] x^n by Horner's rule."""
    if start >= weights.size:
        return 0.0
    trimmed = weights.copy()
    trimmed[:start] = 0.0
    return float(np.polynomial.polynomial.polyval(x, trimmed))


def _report(f: TruncatedSeries, r: float, value: float, tail: float) -> RadialEvalReport:
    if math.isinf(tail):
        logger.warning("series of order %d has no growth claim; tail at r=%g is unbounded", f.order, r)
    return RadialEvalReport(r=r, value=value, tail=tail, order_used=f.order)


def majorant(f: TruncatedSeries, r: float) -> RadialEvalReport:
    """M_f(r) = sum_{n >= 0} |a_n| r^n."""
    _check_radius(r)
    value = _power_sum(np.abs(f.coeffs), r, 0)
    return _report(f, r, value, f.growth.majorant_tail(r, f.order))


def majorant_nonconstant(f: TruncatedSeries, r: float) -> RadialEvalReport:
    """sum_{n >= 1} |a_n| r^n, summed without cancelling against |a_0|."""
    _check_radius(r)
    value = _power_sum(np.abs(f.coeffs), r, 1)
    return _report(f, r, value, f.growth.majorant_tail(r, f.order))


def norm_sq(f: TruncatedSeries, r: float) -> RadialEvalReport:
    """||f_0||_r = sum_{n >= 1} |a_n|^2 r^(2n)."""
    _check_radius(r)
    value = _power_sum(np.abs(f.coeffs) ** 2, r * r, 1)
    return _report(f, r, value, f.growth.square_tail(r, f.order))


def full_norm_sq(f: TruncatedSeries, r: float) -> RadialEvalReport:
    """||f||_r = sum_{n >= 0} |a_n|^2 r^(2n)."""
    _check_radius(r)
    value = _power_sum(np.abs(f.coeffs) ** 2, r * r, 0)
    return _report(f, r, value, f.growth.square_tail(r, f.order))


def refined_weight(a0_modulus: float, r: float) -> float:
    return 1.0 / (1.0 + a0_modulus) + r / (1.0 - r)


def refined_functional(f: TruncatedSeries, r: float, p: float = 1.0) -> RadialEvalReport:
    """|a_0|^p + sum_{n>=1} |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) ||f_0||_r."""
    _check_radius(r)
    if not 0.0 < p <= 2.0:
        raise DomainError(f"exponent p must lie in (0, 2], got {p}")
    a0 = abs(f.coeffs[0])
    linear = majorant_nonconstant(f, r)
    quadratic = norm_sq(f, r)
    weight = refined_weight(a0, r)
    return RadialEvalReport(
        r=r,
        value=a0 ** p + linear.value + weight * quadratic.value,
        tail=linear.tail + weight * quadratic.tail,
        order_used=f.order,
    )


def distance_form_T(f: TruncatedSeries, r: float, lam: float) -> RadialEvalReport:
    """T_f(r) = sum_{n>=1} |a_n| r^n + (1/(2-lambda) + r/(1-r)) ||f_0||_r."""
    _check_radius(r)
    _check_distance(lam)
    linear = majorant_nonconstant(f, r)
    quadratic = norm_sq(f, r)
    weight = 1.0 / (2.0 - lam) + r / (1.0 - r)
    return RadialEvalReport(
        r=r,
        value=linear.value + weight * quadratic.value,
        tail=linear.tail + weight * quadratic.tail,
        order_used=f.order,
    )


def half_plane_excess(lam: float, r: float) -> float:
    """S_g(r) - 1 for the half-plane map, kept free of cancellation for small lambda."""
    _check_distance(lam)
    _check_radius(r)
    denominator = (2.0 - lam) * (1.0 - r) * (1.0 - r * r)
    return -lam * phi_poly(lam, r) / denominator


def half_plane_closed_form(lam: float, r: float) -> float:
    """S_g(r) of the half-plane map with a_0 = 1 - lambda, in closed form."""
    return 1.0 + half_plane_excess(lam, r)


def koebe_distance_closed_form(lam: float, r: float) -> float:
    """T_g(r) for g = 4 lambda * koebe, whose image has distance lambda from g(0) = 0."""
    _check_distance(lam)
    _check_radius(r)
    denominator = (2.0 - lam) * (1.0 - r) * (1.0 - r * r) ** 3
    return lam - lam * psi_poly(lam, r) / denominator
