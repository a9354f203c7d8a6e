"""
Canonical analytic functions of the unit disk and seeded random generators.

The canonical families are the extremal functions of the Bohr-type
inequalities: the disk automorphism phi_a, the half-plane map onto
{Re w < 1} and the Koebe function. The random generators produce finite
Blaschke-type products with real parameters, which are unit-bounded
(``random_unit_bounded``) or in addition fix the origin (``random_schwarz``).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np

from .errors import DomainError
from .series_core import (
    DEFAULT_ORDER,
    BoundedBy,
    ExactGeometric,
    LinearBy,
    TruncatedSeries,
    constant_series,
    identity_z,
    multiply,
)

logger = logging.getLogger(__name__)

# Blaschke parameters stay away from 0 and 1 so that no factor degenerates.
PARAMETER_LOW = 0.1
PARAMETER_HIGH = 0.9


class FamilyTag(str, Enum):
    MOEBIUS_PHI_A = "moebius_phi_a"
    HALF_PLANE = "half_plane"
    KOEBE = "koebe"
    IDENTITY_Z = "identity_z"
    CONSTANT = "constant"


@dataclass(frozen=True)
class CanonicalFamily:
    """A named member of one of the canonical families."""
    tag: FamilyTag
    parameter: Optional[float] = None

    def __post_init__(self):
        if self.tag in (FamilyTag.MOEBIUS_PHI_A, FamilyTag.HALF_PLANE):
            _require_unit_interval(self.parameter, self.tag.value)
        elif self.tag is FamilyTag.CONSTANT and self.parameter is None:
            raise DomainError("constant family needs a value")

    def build(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        if self.tag is FamilyTag.MOEBIUS_PHI_A:
            return moebius_phi_a(self.parameter, order)
        if self.tag is FamilyTag.HALF_PLANE:
            return half_plane_map(self.parameter, order)
        if self.tag is FamilyTag.KOEBE:
            return koebe(order)
        if self.tag is FamilyTag.IDENTITY_Z:
            return identity_z(order)
        return constant_series(self.parameter, order)

    def describe(self) -> dict:
        return {"tag": self.tag.value, "parameter": self.parameter}


def _require_unit_interval(value: Optional[float], name: str) -> None:
    if value is None or not 0.0 < value < 1.0:
        raise DomainError(f"{name} parameter must lie in (0, 1), got {value}")


def moebius_phi_a(a: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """phi_a(z) = (a - z)/(1 - a z) = a - (1 - a^2) sum_{k>=1} a^(k-1) z^k."""
    _require_unit_interval(a, "moebius_phi_a")
    scale = 1.0 - a * a
    coeffs = np.empty(order + 1, dtype=np.complex128)
    coeffs[0] = a
    coeffs[1:] = -scale * a ** np.arange(order)
    return TruncatedSeries(coeffs, ExactGeometric(base=a, scale=scale), sup_bound=1.0)


def half_plane_map(a0: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """g(z) = a0 - 2(1 - a0) z/(1 - z), mapping the disk onto {Re w < 1}.

    The expansion of z/(1 - z) starts at n = 1, so b_n = -2(1 - a0) for n >= 1.
    """
    _require_unit_interval(a0, "half_plane_map")
    bound = 2.0 * (1.0 - a0)
    coeffs = np.full(order + 1, -bound, dtype=np.complex128)
    coeffs[0] = a0
    return TruncatedSeries(coeffs, BoundedBy(bound))


def koebe(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """z/(1 - z)^2 = sum n z^n."""
    return TruncatedSeries(np.arange(order + 1, dtype=np.complex128), LinearBy(1.0))


def blaschke_parameters(seed: int, depth: int) -> List[float]:
    """The real parameters a_1..a_depth drawn for ``seed``."""
    if depth < 0:
        raise DomainError(f"depth must be non-negative, got {depth}")
    rng = np.random.default_rng(seed)
    return [float(a) for a in rng.uniform(PARAMETER_LOW, PARAMETER_HIGH, size=depth)]


def _blaschke_product(parameters: List[float], order: int) -> TruncatedSeries:
    product = moebius_phi_a(parameters[0], order)
    for a in parameters[1:]:
        product = multiply(product, moebius_phi_a(a, order))
    return product


def random_unit_bounded(seed: int, order: int = DEFAULT_ORDER, depth: int = 1) -> TruncatedSeries:
    """prod_{i=1}^{depth} (a_i - z)/(1 - a_i z) with seeded a_i in (0.1, 0.9)."""
    if depth < 1:
        raise DomainError(f"unit-bounded generator needs depth >= 1, got {depth}")
    return _blaschke_product(blaschke_parameters(seed, depth), order)


def random_schwarz(seed: int, order: int = DEFAULT_ORDER, depth: int = 1) -> TruncatedSeries:
    """z * prod_{i=1}^{depth} (a_i - z)/(1 - a_i z): fixes 0 and maps the disk into itself."""
    if depth == 0:
        return identity_z(order)
    product = _blaschke_product(blaschke_parameters(seed, depth), order)
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[1:] = product.coeffs[:order]
    logger.debug("schwarz series seed=%d depth=%d order=%d", seed, depth, order)
    return TruncatedSeries(coeffs, BoundedBy(1.0), sup_bound=1.0)
