"""
Truncated Taylor series over complex coefficients.

A ``TruncatedSeries`` stores a_0..a_N together with a growth class that says
how large the omitted coefficients a_{N+1}, a_{N+2}, ... can be. The growth
class is what turns a partial sum into a certified enclosure: every functional
in ``bohr_functionals`` adds the tail bound reported here to its partial sum.

Values are immutable; every operation returns a new series.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DomainError, GrowthClaimError, NonVanishingConstantTerm

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64
MAX_ORDER = 4096

# Growth claims are checked against stored coefficients up to this many ulps
# of representation rounding.
_ULP_SLACK = 8


def _geometric_tail(x: float, start: int) -> float:
    """Sum of x**n for n >= start, for 0 <= x < 1."""
    if x >= 1.0:
        return math.inf
    return x ** start / (1.0 - x)


@dataclass(frozen=True)
class BoundedBy:
    """|a_n| <= C for every n beyond the truncation order."""
    C: float
    kind: str = field(default="bounded", init=False)

    def coefficient_bound(self, n: int) -> float:
        return self.C

    def majorant_tail(self, r: float, order: int) -> float:
        return self.C * _geometric_tail(r, order + 1)

    def square_tail(self, r: float, order: int) -> float:
        return self.C ** 2 * _geometric_tail(r * r, order + 1)

    def scaled(self, factor: float) -> "GrowthClass":
        return BoundedBy(abs(factor) * self.C)


@dataclass(frozen=True)
class LinearBy:
    """|a_n| <= C * n for every n beyond the truncation order."""
    C: float
    kind: str = field(default="linear", init=False)

    def coefficient_bound(self, n: int) -> float:
        return self.C * n

    def majorant_tail(self, r: float, order: int) -> float:
        if r >= 1.0:
            return math.inf
        m = order + 1
        return self.C * r ** m * (m * (1.0 - r) + r) / (1.0 - r) ** 2

    def square_tail(self, r: float, order: int) -> float:
        # sum_{n >= m} n^2 x^n in closed form, x = r^2
        x = r * r
        if x >= 1.0:
            return math.inf
        m = order + 1
        numerator = m * m - (2 * m * m - 2 * m - 1) * x + (m - 1) ** 2 * x * x
        return self.C ** 2 * x ** m * numerator / (1.0 - x) ** 3

    def scaled(self, factor: float) -> "GrowthClass":
        return LinearBy(abs(factor) * self.C)


@dataclass(frozen=True)
class ExactGeometric:
    """|a_n| = scale * base**(n-1) for n >= 1 (Moebius-type tails)."""
    base: float
    scale: float
    kind: str = field(default="geometric", init=False)

    def __post_init__(self):
        if not 0.0 <= self.base < 1.0:
            raise DomainError(f"geometric base must lie in [0, 1), got {self.base}")

    def coefficient_bound(self, n: int) -> float:
        if n == 0:
            return math.inf
        return abs(self.scale) * self.base ** (n - 1)

    def majorant_tail(self, r: float, order: int) -> float:
        qr = self.base * r
        return abs(self.scale) * r * qr ** order / (1.0 - qr)

    def square_tail(self, r: float, order: int) -> float:
        qr = self.base * r
        return self.scale ** 2 * r * r * qr ** (2 * order) / (1.0 - qr * qr)

    def scaled(self, factor: float) -> "GrowthClass":
        return ExactGeometric(self.base, factor * self.scale)


@dataclass(frozen=True)
class CauchyBound:
    """|a_n| <= M * radius**(-n), the Cauchy estimate from max |f| on |z| = radius."""
    M: float
    radius: float
    kind: str = field(default="cauchy", init=False)

    def __post_init__(self):
        if not 0.0 < self.radius <= 1.0:
            raise DomainError(f"Cauchy radius must lie in (0, 1], got {self.radius}")

    def coefficient_bound(self, n: int) -> float:
        return self.M * self.radius ** (-n)

    def majorant_tail(self, r: float, order: int) -> float:
        return self.M * _geometric_tail(r / self.radius, order + 1)

    def square_tail(self, r: float, order: int) -> float:
        ratio = r / self.radius
        return self.M ** 2 * _geometric_tail(ratio * ratio, order + 1)

    def scaled(self, factor: float) -> "GrowthClass":
        return CauchyBound(abs(factor) * self.M, self.radius)


@dataclass(frozen=True)
class Polynomial:
    """Every omitted coefficient is zero; the stored ones are exact."""
    kind: str = field(default="polynomial", init=False)

    def coefficient_bound(self, n: int) -> float:
        return math.inf

    def majorant_tail(self, r: float, order: int) -> float:
        return 0.0

    def square_tail(self, r: float, order: int) -> float:
        return 0.0

    def scaled(self, factor: float) -> "GrowthClass":
        return self


@dataclass(frozen=True)
class Unknown:
    """No claim about the omitted coefficients; every tail is infinite."""
    kind: str = field(default="unknown", init=False)

    def coefficient_bound(self, n: int) -> float:
        return math.inf

    def majorant_tail(self, r: float, order: int) -> float:
        return math.inf

    def square_tail(self, r: float, order: int) -> float:
        return math.inf

    def scaled(self, factor: float) -> "GrowthClass":
        return self


GrowthClass = Union[BoundedBy, LinearBy, ExactGeometric, CauchyBound, Polynomial, Unknown]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients a_0..a_N of an analytic function in the unit disk.

    ``sup_bound`` is an optional known bound on |f| over the whole disk; it
    lets products and compositions keep a certified growth class.
    """
    coeffs: np.ndarray
    growth: GrowthClass = field(default_factory=Unknown)
    sup_bound: Optional[float] = None

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=np.complex128, copy=True).reshape(-1)
        if arr.size == 0:
            raise DomainError("a truncated series needs at least the constant term")
        if not np.all(np.isfinite(arr)):
            raise DomainError("series coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        self._check_growth()

    def _check_growth(self) -> None:
        magnitudes = np.abs(self.coeffs)
        # Claims concern a_n for n >= 1; the constant term never enters a tail.
        for n, value in enumerate(magnitudes[1:], start=1):
            bound = self.growth.coefficient_bound(n)
            if math.isinf(bound):
                continue
            if value > bound + _ULP_SLACK * math.ulp(max(bound, 1.0)):
                raise GrowthClaimError(
                    f"|a_{n}| = {value!r} exceeds the {self.growth.kind} bound {bound!r}"
                )

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.coeffs, other.coeffs)
            and self.growth == other.growth
        )

    __hash__ = None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError(f"cannot extend order {self.order} to {order}")
        growth = self.growth
        dropped = np.abs(self.coeffs[order + 1:])
        if isinstance(growth, Polynomial) and np.any(dropped):
            growth = BoundedBy(float(np.abs(self.coeffs[1:]).max()))
        return replace(self, coeffs=self.coeffs[: order + 1], growth=growth)

    def with_growth(self, growth: GrowthClass, sup_bound: Optional[float] = None) -> "TruncatedSeries":
        return replace(self, growth=growth, sup_bound=sup_bound)

    def tail_bound(self, radius: float) -> float:
        """Bound on |f(z) - partial sum| for |z| <= radius."""
        return self.growth.majorant_tail(radius, self.order)


def from_coefficients(
    values: Sequence[complex],
    growth: Optional[GrowthClass] = None,
    sup_bound: Optional[float] = None,
) -> TruncatedSeries:
    return TruncatedSeries(np.asarray(values, dtype=np.complex128), growth or Unknown(), sup_bound)


def zero_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries(np.zeros(order + 1), Polynomial(), 0.0)


def constant_series(c: complex, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[0] = c
    return TruncatedSeries(coeffs, Polynomial(), abs(c))


def one_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return constant_series(1.0, order)


def identity_z(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    if order >= 1:
        coeffs[1] = 1.0
    return TruncatedSeries(coeffs, Polynomial(), 1.0)


def _common_order(a: TruncatedSeries, b: TruncatedSeries) -> int:
    return min(a.order, b.order)


def _has_empty_tail(s: TruncatedSeries) -> bool:
    return isinstance(s.growth, Polynomial) or (isinstance(s.growth, BoundedBy) and s.growth.C == 0.0)


def _is_constant(s: TruncatedSeries) -> bool:
    return _has_empty_tail(s) and not np.any(s.coeffs[1:])


def _is_identity(s: TruncatedSeries) -> bool:
    if not _has_empty_tail(s) or s.order < 1:
        return False
    return s.coeffs[1] == 1.0 and not np.any(s.coeffs[2:]) and s.coeffs[0] == 0.0


def _as_bounded(s: TruncatedSeries) -> GrowthClass:
    if isinstance(s.growth, Polynomial):
        return BoundedBy(float(np.abs(s.coeffs[1:]).max(initial=0.0)))
    return s.growth


def _sum_growth(a: TruncatedSeries, b: TruncatedSeries) -> GrowthClass:
    if _is_constant(b):
        return a.growth
    if _is_constant(a):
        return b.growth
    if isinstance(a.growth, Polynomial) and isinstance(b.growth, Polynomial):
        return Polynomial()
    left, right = _as_bounded(a), _as_bounded(b)
    if isinstance(left, BoundedBy) and isinstance(right, BoundedBy):
        return BoundedBy(left.C + right.C)
    # |a_n| <= C implies |a_n| <= C * n for n >= 1.
    if isinstance(left, (BoundedBy, LinearBy)) and isinstance(right, (BoundedBy, LinearBy)):
        return LinearBy(left.C + right.C)
    return Unknown()


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(a, b)
    a, b = a.truncate(n), b.truncate(n)
    coeffs = a.coeffs + b.coeffs
    growth = _sum_growth(a, b)

    sup_bound = None
    if a.sup_bound is not None and b.sup_bound is not None:
        sup_bound = a.sup_bound + b.sup_bound
        if isinstance(growth, Unknown):
            growth = BoundedBy(sup_bound)
    return TruncatedSeries(coeffs, growth, sup_bound)


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = _common_order(a, b)
    a, b = a.truncate(n), b.truncate(n)
    coeffs = np.convolve(a.coeffs, b.coeffs)[: n + 1]

    for series, other in ((a, b), (b, a)):
        if _is_constant(other):
            factor = abs(other.coeffs[0])
            sup_bound = None if series.sup_bound is None else factor * series.sup_bound
            return TruncatedSeries(coeffs, series.growth.scaled(factor), sup_bound)
    if a.sup_bound is not None and b.sup_bound is not None:
        sup_bound = a.sup_bound * b.sup_bound
        return TruncatedSeries(coeffs, BoundedBy(sup_bound), sup_bound)
    return TruncatedSeries(coeffs, Unknown())


def scale(f: TruncatedSeries, factor: float) -> TruncatedSeries:
    sup_bound = None if f.sup_bound is None else abs(factor) * f.sup_bound
    return TruncatedSeries(factor * f.coeffs, f.growth.scaled(factor), sup_bound)


def compose(g: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of g(w(z)) by Horner accumulation in powers of w."""
    if abs(w.coeffs[0]) > 0:
        raise NonVanishingConstantTerm(
            f"inner series must vanish at the origin, got w(0) = {complex(w.coeffs[0])}"
        )
    n = _common_order(g, w)
    inner = w.coeffs[: n + 1]

    acc = np.zeros(n + 1, dtype=np.complex128)
    acc[0] = g.coeffs[n]
    for k in range(n - 1, -1, -1):
        acc = np.convolve(acc, inner)[: n + 1]
        acc[0] += g.coeffs[k]

    if _is_identity(w):
        return TruncatedSeries(acc, g.truncate(n).growth, g.sup_bound)
    # Subordination keeps the modulus bound of g when w maps the disk into itself.
    if g.sup_bound is not None and w.sup_bound is not None and w.sup_bound <= 1.0:
        return TruncatedSeries(acc, BoundedBy(g.sup_bound), g.sup_bound)
    logger.debug("composition of order %d carries no growth claim", n)
    return TruncatedSeries(acc, Unknown())


def evaluate(f: TruncatedSeries, z: complex) -> complex:
    """Partial sum of f at z by Horner's rule."""
    if abs(z) >= 1.0:
        raise DomainError(f"evaluation point must lie in the open unit disk, got |z| = {abs(z)}")
    return complex(np.polynomial.polynomial.polyval(z, f.coeffs))
