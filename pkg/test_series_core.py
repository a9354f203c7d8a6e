#!/usr/bin/env python3
"""
Tests for truncated series arithmetic and growth classes.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src import (
    BoundedBy,
    CauchyBound,
    DomainError,
    GrowthClaimError,
    LinearBy,
    NonVanishingConstantTerm,
    Polynomial,
    Unknown,
    add,
    compose,
    constant_series,
    evaluate,
    from_coefficients,
    identity_z,
    majorant,
    moebius_phi_a,
    multiply,
    one_series,
    random_schwarz,
    random_unit_bounded,
    scale,
    zero_series,
)

coefficient = st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)


def test_additive_identity():
    """Adding the zero series keeps coefficients and growth claim."""
    f = random_unit_bounded(3, 32, 2)
    assert add(f, zero_series(32)) == f
    assert add(zero_series(32), f) == f


def test_multiplicative_identity():
    """Multiplying by one keeps the series exactly."""
    f = moebius_phi_a(0.4, 48)
    assert multiply(f, one_series(48)) == f
    assert multiply(one_series(48), f) == f


def test_compose_with_identity_is_identity():
    """g(z) composed with z is g; z composed with w is w."""
    g = random_unit_bounded(11, 40, 3)
    assert compose(g, identity_z(40)) == g

    w = random_schwarz(5, 40, 2)
    assert np.array_equal(compose(identity_z(40), w).coeffs, w.coeffs)


def test_compose_rejects_nonvanishing_inner_constant():
    inner = from_coefficients([0.5, 1.0, 0.0, 0.0])
    with pytest.raises(NonVanishingConstantTerm):
        compose(moebius_phi_a(0.3, 3), inner)


def test_compose_geometric_series():
    """1/(1 - w) with w = z/2 gives coefficients 2^-n."""
    geometric = from_coefficients(np.ones(21), BoundedBy(1.0))
    half_z = from_coefficients([0.0, 0.5] + [0.0] * 19, Polynomial())
    result = compose(geometric, half_z)
    assert np.allclose(result.coeffs, 0.5 ** np.arange(21), rtol=0, atol=1e-15)


def test_multiply_truncates_to_smaller_order():
    a = from_coefficients([1.0, 1.0, 0.0, 0.0, 0.0])
    b = from_coefficients([1.0, 1.0, 0.0])
    product = multiply(a, b)
    assert product.order == 2
    assert np.array_equal(product.coeffs, np.array([1.0, 2.0, 1.0], dtype=complex))


def test_growth_claim_checked_at_construction():
    """A claim contradicted by a stored coefficient is rejected."""
    with pytest.raises(GrowthClaimError):
        from_coefficients([0.0, 2.0, 0.0], BoundedBy(1.0))
    with pytest.raises(GrowthClaimError):
        from_coefficients([0.0, 1.0, 5.0], LinearBy(1.0))


def test_coefficients_are_read_only():
    f = moebius_phi_a(0.5, 8)
    with pytest.raises(ValueError):
        f.coeffs[0] = 2.0


def test_empty_or_nonfinite_coefficients_rejected():
    with pytest.raises(DomainError):
        from_coefficients([])
    with pytest.raises(DomainError):
        from_coefficients([1.0, math.nan])


def test_evaluate_outside_disk_raises():
    with pytest.raises(DomainError):
        evaluate(moebius_phi_a(0.5, 8), 1.0)


def test_evaluate_moebius_within_tail():
    a, z = 0.6, 0.4 + 0.3j
    f = moebius_phi_a(a, 128)
    exact = (a - z) / (1 - a * z)
    assert abs(evaluate(f, z) - exact) <= f.tail_bound(abs(z)) + 1e-14


def test_linear_square_tail_matches_direct_sum():
    """Closed form of sum_{n > N} n^2 r^(2n) against a long direct sum."""
    r, order = 0.5, 4
    n = np.arange(order + 1, 4000)
    direct = float(np.sum(n * n * r ** (2 * n)))
    assert LinearBy(1.0).square_tail(r, order) == pytest.approx(direct, rel=1e-12)


def test_linear_majorant_tail_matches_direct_sum():
    r, order = 0.3, 6
    n = np.arange(order + 1, 4000)
    direct = float(np.sum(n * r ** n))
    assert LinearBy(2.0).majorant_tail(r, order) == pytest.approx(2.0 * direct, rel=1e-12)


def test_cauchy_bound_tail():
    growth = CauchyBound(M=3.0, radius=0.5)
    assert growth.coefficient_bound(2) == pytest.approx(12.0)
    assert math.isinf(growth.majorant_tail(0.6, 10))
    assert growth.majorant_tail(0.25, 3) == pytest.approx(3.0 * 0.5 ** 4 / 0.5)


def test_unknown_growth_has_infinite_tail():
    f = from_coefficients([1.0, 2.0])
    assert isinstance(f.growth, Unknown)
    assert math.isinf(f.tail_bound(0.1))


def test_scale_scales_growth_and_coefficients():
    f = scale(from_coefficients(np.arange(6), LinearBy(1.0)), -2.0)
    assert f.growth == LinearBy(2.0)
    assert f[3] == -6.0


def test_constant_times_bounded_series():
    f = multiply(constant_series(0.5, 16), random_unit_bounded(1, 16, 2))
    assert f.growth == BoundedBy(0.5)
    assert f.sup_bound == 0.5


@settings(max_examples=50, deadline=None)
@given(st.lists(coefficient, min_size=1, max_size=12), st.lists(coefficient, min_size=1, max_size=12))
def test_add_is_commutative(left, right):
    a, b = from_coefficients(left), from_coefficients(right)
    assert np.array_equal(add(a, b).coeffs, add(b, a).coeffs)


@settings(max_examples=50, deadline=None)
@given(st.lists(coefficient, min_size=1, max_size=10), st.lists(coefficient, min_size=1, max_size=10))
def test_multiply_matches_polynomial_product(left, right):
    a, b = from_coefficients(left), from_coefficients(right)
    n = min(a.order, b.order)
    expected = np.convolve(np.asarray(left[: n + 1]), np.asarray(right[: n + 1]))[: n + 1]
    assert np.allclose(multiply(a, b).coeffs, expected, rtol=1e-12, atol=1e-12)


def test_shorter_factor_downgrades_polynomial_claim():
    """Cutting z down to its constant term must not leave a zero tail."""
    product = multiply(identity_z(64), one_series(0))
    assert product.order == 0
    assert not isinstance(product.growth, Polynomial)
    assert majorant(product, 0.5).upper >= 0.5

    total = add(identity_z(64), zero_series(0))
    assert majorant(total, 0.5).upper >= 0.5


def test_polynomial_sum_keeps_exact_tail():
    total = add(identity_z(16), constant_series(0.25, 16))
    assert total.growth == Polynomial()
    assert majorant(total, 0.5).tail == 0.0


def test_polynomial_plus_bounded_series_stays_bounded():
    total = add(random_unit_bounded(4, 32, 2), scale(identity_z(32), 0.5))
    assert total.growth == BoundedBy(1.5)


def test_compose_with_shorter_identity_downgrades_polynomial():
    g = from_coefficients([0.0, 1.0, 0.0, 3.0], Polynomial())
    result = compose(g, identity_z(2))
    assert result.order == 2
    assert result.growth == BoundedBy(3.0)


def test_compose_matches_pointwise_composition():
    """g(w(z)) from the composed series agrees with evaluating g at w(z)."""
    rng = np.random.default_rng(2024)
    for trial in range(100):
        g = random_unit_bounded(trial, 64, 1 + trial % 3)
        w = random_schwarz(1000 + trial, 64, 1 + trial % 2)
        z = 0.3 * math.sqrt(rng.uniform()) * np.exp(2j * math.pi * rng.uniform())
        composed = evaluate(compose(g, w), z)
        direct = evaluate(g, evaluate(w, z))
        assert abs(composed - direct) <= 1e-12


short_coefficients = st.lists(coefficient, min_size=1, max_size=33)


@settings(max_examples=50, deadline=None)
@given(short_coefficients, short_coefficients, short_coefficients)
def test_multiply_is_associative(left, middle, right):
    a, b, c = from_coefficients(left), from_coefficients(middle), from_coefficients(right)
    grouped_left = multiply(multiply(a, b), c)
    grouped_right = multiply(a, multiply(b, c))
    assert np.allclose(grouped_left.coeffs, grouped_right.coeffs, rtol=1e-10, atol=1e-8)


@settings(max_examples=50, deadline=None)
@given(short_coefficients, short_coefficients, short_coefficients)
def test_multiply_distributes_over_add(left, middle, right):
    a, b, c = from_coefficients(left), from_coefficients(middle), from_coefficients(right)
    expanded = add(multiply(a, b), multiply(a, c))
    assert np.allclose(multiply(a, add(b, c)).coeffs, expanded.coeffs, rtol=1e-10, atol=1e-8)
