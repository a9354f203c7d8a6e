#!/usr/bin/env python3
"""
Tests for the radius formulas, the certified bisection and the polynomial identities.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src import (
    BracketError,
    DomainError,
    bisect_root,
    classical_bohr_radius,
    lambda_of_r,
    p_family_infimum,
    p_family_radius,
    phi_poly,
    refined_radius,
    rg_polynomial,
    rstar_bisect,
    rstar_cardano,
    rstar_polynomial,
    solve_r0,
    solve_r0_for_distance,
    solve_rg,
)
from src.radius_solvers import (
    a_of_x,
    identity_errors,
    monotonicity_violations,
    phi_partial_lambda,
    phi_partial_r,
    psi_partial_lambda,
    psi_poly,
)

RSTAR = 0.24683
RG = 0.128445


def test_rstar_reproduction():
    result = rstar_bisect(1e-12)
    assert abs(result.value - RSTAR) < 5e-6
    assert abs(rstar_polynomial(result.value)) <= 1e-11
    assert result.bracket_lo <= result.value <= result.bracket_hi
    assert result.width <= 1e-12


def test_rstar_bisection_and_cardano_agree():
    assert abs(rstar_bisect(1e-13).value - rstar_cardano()) <= 1e-12


def test_rg_reproduction():
    result = solve_rg()
    assert abs(result.value - RG) < 5e-7
    assert abs(rg_polynomial(result.value)) <= 1e-10


def test_exact_radii():
    assert classical_bohr_radius() == pytest.approx(1 / 3)
    assert refined_radius(0.0) == 0.5
    assert refined_radius(0.9) == pytest.approx(1 / 2.9)


@pytest.mark.parametrize("a0", [0.0, 0.3, 0.7, 0.95])
def test_p_family_with_p_one_is_refined_radius(a0):
    assert p_family_radius(a0, 1.0) == pytest.approx(refined_radius(a0), rel=1e-14)


@pytest.mark.parametrize("p", [0.5, 1.0, 1.5, 2.0])
def test_p_family_approaches_infimum(p):
    assert p_family_radius(0.99, p) == pytest.approx(p_family_infimum(p), abs=2e-2)
    grid = [p_family_radius(a, p) for a in np.linspace(0.0, 0.99, 100)]
    assert min(grid) >= p_family_infimum(p) - 1e-15


def test_p_family_domain():
    with pytest.raises(DomainError):
        p_family_radius(1.0, 1.0)
    with pytest.raises(DomainError):
        p_family_radius(0.5, 0.0)
    with pytest.raises(DomainError):
        refined_radius(-0.1)


def test_solve_r0_limits():
    """r_0 increases from r* (a0 near 0) to 1/3 (a0 near 1)."""
    assert abs(solve_r0(0.999).value - 1 / 3) < 1e-3
    assert abs(solve_r0(0.001).value - rstar_cardano()) < 1e-3
    assert RSTAR - 1e-5 < solve_r0(0.5).value < 0.33334


def test_solve_r0_is_a_root():
    for a0 in (0.1, 0.5, 0.9):
        result = solve_r0(a0)
        assert abs(phi_poly(1.0 - a0, result.value)) <= 1e-11


def test_solve_r0_domain():
    for a0 in (0.0, 1.0, -0.5):
        with pytest.raises(DomainError):
            solve_r0(a0)
    with pytest.raises(DomainError):
        solve_r0_for_distance(0.0)


def test_distance_one_gives_rstar():
    assert solve_r0_for_distance(1.0).value == pytest.approx(rstar_cardano(), abs=1e-12)


def test_lambda_of_r_inverts_r0():
    lam = lambda_of_r(0.3)
    assert lam == pytest.approx(0.34913132291432986, abs=1e-12)
    assert abs(phi_poly(lam, 0.3)) <= 1e-14
    assert solve_r0_for_distance(lam).value == pytest.approx(0.3, abs=1e-11)


def test_lambda_of_r_domain():
    with pytest.raises(DomainError):
        lambda_of_r(0.2)
    with pytest.raises(DomainError):
        lambda_of_r(0.34)


def test_bisect_root_requires_sign_change():
    with pytest.raises(BracketError):
        bisect_root(lambda x: x * x + 1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        bisect_root(lambda x: x, -1.0, 1.0, tol=0.0)


def test_bisect_root_finds_sqrt_two():
    result = bisect_root(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-14, name="sqrt2")
    assert result.value == pytest.approx(np.sqrt(2.0), abs=1e-14)
    assert result.name == "sqrt2"
    assert result.iterations > 0


def test_polynomial_identities_hold_on_grid():
    errors = identity_errors(1000)
    assert set(errors) >= {
        "phi_at_lambda_0",
        "phi_at_lambda_1",
        "phi_partial_lambda_at_1",
        "psi_at_lambda_1",
        "psi_partial_lambda_at_1",
    }
    for name, error in errors.items():
        assert error <= 1e-14, name


def test_monotonicity_conditions_hold_on_grid():
    assert all(count == 0 for count in monotonicity_violations(50).values())


@pytest.mark.parametrize("p", [0.5, 1.0, 1.5, 2.0])
def test_a_of_x_nonpositive(p):
    assert a_of_x(1.0, p) == pytest.approx(0.0, abs=1e-15)
    assert all(a_of_x(float(x), p) <= 1e-15 for x in np.linspace(0.0, 1.0, 200))


def test_phi_partial_lambda_edge_value():
    for r in np.linspace(0.05, 0.95, 10):
        assert phi_partial_lambda(1.0, r) == pytest.approx(-(1.0 - r) ** 3, abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=0.99, allow_nan=False),
    st.floats(min_value=0.05, max_value=2.0, allow_nan=False),
)
def test_p_family_radius_range(a0, p):
    value = p_family_radius(a0, p)
    assert p_family_infimum(p) - 1e-12 <= value <= 0.5 + 1e-15


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.98), st.floats(min_value=0.001, max_value=0.01))
def test_solve_r0_increasing(a0, step):
    assert solve_r0(a0).value < solve_r0(a0 + step).value


def test_bisect_root_accepts_exact_zero_at_endpoint():
    result = bisect_root(lambda x: x - 1.0, 0.0, 1.0, name="edge")
    assert result.value == 1.0
    assert result.bracket_lo == result.bracket_hi == 1.0
    assert result.residual == 0.0
    assert result.iterations == 0


@pytest.mark.parametrize(
    "a0, expected",
    [(1e-16, rstar_cardano()), (0.9999999999999999, 1.0 / 3.0)],
)
def test_solve_r0_at_the_edges_of_the_range(a0, expected):
    result = solve_r0(a0)
    assert result.value == pytest.approx(expected, abs=1e-12)
    assert result.bracket_lo <= result.value <= result.bracket_hi


def test_phi_decreases_in_r_on_the_radius_band():
    assert monotonicity_violations(50)["phi_partial_r_nonnegative"] == 0
    for lam in (0.01, 0.5, 0.99):
        for r in np.linspace(rstar_cardano(), 1.0 / 3.0, 20):
            assert phi_partial_r(lam, float(r)) < 0.0


def test_partial_derivatives_match_central_differences():
    lam, r, h = 0.4, 0.28, 1e-5
    phi_difference = (phi_poly(lam + h, r) - phi_poly(lam - h, r)) / (2.0 * h)
    psi_difference = (psi_poly(lam + h, r) - psi_poly(lam - h, r)) / (2.0 * h)
    assert phi_partial_lambda(lam, r) == pytest.approx(phi_difference, abs=1e-8)
    assert psi_partial_lambda(lam, r) == pytest.approx(psi_difference, abs=1e-8)
    r_difference = (phi_poly(lam, r + h) - phi_poly(lam, r - h)) / (2.0 * h)
    assert phi_partial_r(lam, r) == pytest.approx(r_difference, abs=1e-8)


def _slope(func, x, h=1e-7):
    return abs(func(x + h) - func(x - h)) / (2.0 * h)


@pytest.mark.parametrize("tol", [1e-8, 1e-10, 1e-12])
def test_residual_is_within_tolerance_times_slope(tol):
    """|residual| <= 10 * tol * |f'(value)| for every solver-backed radius."""
    cases = [(rstar_bisect(tol), rstar_polynomial), (solve_rg(tol), rg_polynomial)]
    for a0 in (0.1, 0.5, 0.9):
        cases.append((solve_r0(a0, tol), lambda x, lam=1.0 - a0: phi_poly(lam, x)))
    for result, func in cases:
        assert result.residual == func(result.value)
        assert abs(result.residual) <= 10.0 * tol * _slope(func, result.value), result.name
