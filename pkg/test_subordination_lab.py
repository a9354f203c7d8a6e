#!/usr/bin/env python3
"""
Tests for quasi-subordination triples, the lemma checks and the sharpness witnesses.
"""

import numpy as np
import pytest

from src import (
    CauchyBound,
    DomainError,
    NonVanishingConstantTerm,
    build_quasi,
    convex_bound_check,
    from_coefficients,
    half_plane_map,
    identity_z,
    koebe,
    moebius_phi_a,
    multiply,
    one_series,
    p_family_radius,
    random_schwarz,
    random_triple,
    random_unit_bounded,
    refined_functional,
    rstar_cardano,
    sharpness_witness_thmB,
    solve_r0,
    solve_rg,
    univalent_bound_check,
    verify_lemma1,
    verify_lemma2,
    verify_rogosinski,
    verify_rogosinski_shifted,
    witness_theorem1,
    witness_theorem2,
    witness_theorem3,
    witness_theorem_a,
)
from src.subordination_lab import (
    TRIPLE_FAMILIES,
    exploratory_lemma_radius,
    p_family_witness_expression,
    verify_majorant_domination,
)

LEMMA_RADII = (0.1, 0.2, 0.3, 1 / 3 - 1e-9)


def test_subordination_with_identity_returns_g():
    g = half_plane_map(0.3, 64)
    assert build_quasi(one_series(64), identity_z(64), g).f == g


def test_majorization_is_plain_product():
    phi = random_unit_bounded(2, 64, 2)
    g = random_unit_bounded(3, 64, 1)
    triple = build_quasi(phi, identity_z(64), g)
    assert np.array_equal(triple.f.coeffs, multiply(phi, g).coeffs)


def test_build_quasi_rejects_nonvanishing_omega():
    omega = from_coefficients([0.1, 0.5] + [0.0] * 14)
    with pytest.raises(NonVanishingConstantTerm):
        build_quasi(one_series(15), omega, moebius_phi_a(0.5, 15))


def test_unbounded_g_gets_cauchy_growth():
    """A Koebe composite has no modulus bound, so f is certified by a Cauchy estimate."""
    triple = build_quasi(random_unit_bounded(4, 64, 2), random_schwarz(5, 64, 2), koebe(64), 0.98)
    assert isinstance(triple.f.growth, CauchyBound)
    assert triple.f.growth.radius == 0.98
    assert triple.f[0] == 0


@pytest.mark.parametrize("family", TRIPLE_FAMILIES)
def test_lemma1_on_random_triples(family):
    for seed in range(20):
        triple = random_triple(seed, 128, 3, family)
        for r in LEMMA_RADII:
            record = verify_lemma1(triple, r)
            assert record.passed, (family, seed, r, record.margin)
            assert record.lhs.certified and record.rhs.certified


@pytest.mark.parametrize("family", TRIPLE_FAMILIES)
def test_majorant_domination_on_random_triples(family):
    for seed in range(10):
        triple = random_triple(seed, 128, 3, family)
        for r in LEMMA_RADII:
            assert verify_majorant_domination(triple, r).passed


def test_lemma1_beyond_one_third_needs_exploratory_flag():
    triple = random_triple(1, 64, 2, "unit_bounded")
    with pytest.raises(DomainError):
        verify_lemma1(triple, 0.4)
    record = verify_lemma1(triple, 0.4, exploratory=True)
    assert record.exploratory


def test_exploratory_radius_is_beyond_one_third():
    radius = exploratory_lemma_radius(random_triple(8, 64, 2, "unit_bounded"))
    assert radius is None or radius > 1 / 3


@pytest.mark.parametrize("family", TRIPLE_FAMILIES)
def test_lemma2_on_subordinate_triples(family):
    for seed in range(10):
        triple = random_triple(seed, 128, 3, family, subordinate=True)
        for r in LEMMA_RADII:
            assert verify_lemma2(triple, r).passed


def test_lemma2_needs_phi_one():
    with pytest.raises(DomainError):
        verify_lemma2(random_triple(3, 64, 2, "unit_bounded"), 0.2)


def test_lemma1_specializes_to_lemma2():
    """With Phi = 1 both checks compare exactly the same quantities."""
    for seed in range(5):
        triple = random_triple(seed, 128, 3, "half_plane", subordinate=True)
        for r in LEMMA_RADII:
            general = verify_lemma1(triple, r)
            special = verify_lemma2(triple, r)
            assert general.lhs.value == special.lhs.value
            assert general.rhs.value == special.rhs.value
            assert general.passed == special.passed


def test_half_plane_instance_at_024():
    g = half_plane_map(0.4, 128)
    triple = build_quasi(one_series(128), random_schwarz(6, 128, 2), g)
    assert verify_lemma2(triple, 0.24).passed


def test_rogosinski_full_range():
    for seed in range(10):
        triple = random_triple(seed, 128, 3, "unit_bounded")
        for r in (0.5, 0.9, 0.95):
            assert verify_rogosinski(triple, r).passed
        assert verify_rogosinski_shifted(triple, 0.7).passed


def test_coefficient_gates():
    assert convex_bound_check(half_plane_map(0.3, 64), 0.7, rtol=1e-12)
    assert not convex_bound_check(half_plane_map(0.3, 64), 0.5)
    assert univalent_bound_check(koebe(64), 0.25)
    assert not univalent_bound_check(koebe(64), 0.2)
    with pytest.raises(DomainError):
        convex_bound_check(koebe(8), 0.0)


def test_witness_expression_is_the_refined_functional():
    a, p, r = 0.5, 1.5, 0.3
    report = refined_functional(moebius_phi_a(a, 512), r, p)
    assert p_family_witness_expression(a, p, r) == pytest.approx(report.value, abs=1e-12)


def test_witness_expression_increasing_in_r():
    for a in (0.1, 0.5, 0.9):
        for p in (0.5, 1.0, 2.0):
            values = [p_family_witness_expression(a, p, r) for r in np.linspace(0.0, 0.99, 200)]
            assert all(lo < hi for lo, hi in zip(values, values[1:]))


def test_theorem_b_witness():
    report = sharpness_witness_thmB(0.9, 1.0)
    assert report.threshold_found == pytest.approx(1 / 2.9, abs=1e-9)
    assert report.family == {"tag": "moebius_phi_a", "parameter": 0.9}


@pytest.mark.parametrize("p", [0.5, 1.0, 1.5, 2.0])
def test_witness_matches_p_family_radius(p):
    for a in np.linspace(0.05, 0.95, 20):
        report = sharpness_witness_thmB(float(a), p)
        assert report.threshold_predicted == p_family_radius(float(a), p)
        assert report.difference <= 1e-8


def test_theorem_a_witness():
    report = witness_theorem_a(0.99)
    assert 1 / 3 < report.threshold_found < 1 / 3 + 0.01
    assert report.difference <= 1e-8


def test_theorem1_witness():
    report = witness_theorem1(0.5)
    assert report.threshold_predicted == solve_r0(0.5).value
    assert report.difference <= 1e-8
    assert abs(witness_theorem1(0.01).threshold_found - rstar_cardano()) < 2e-3
    assert abs(witness_theorem1(0.999).threshold_found - 1 / 3) < 1e-3


@pytest.mark.parametrize("a0", [round(0.05 * k, 2) for k in range(1, 20)])
def test_theorem1_witness_tracks_r0_across_a0(a0):
    report = witness_theorem1(a0)
    assert abs(report.threshold_found - solve_r0(a0).value) <= 1e-8


def test_witness_reports_carry_crossing_bracket():
    for report in (witness_theorem_a(0.5), witness_theorem1(0.3), witness_theorem2(0.4), witness_theorem3()):
        assert report.bracket_lo <= report.threshold_found <= report.bracket_hi
        assert report.bracket_hi - report.bracket_lo <= 1e-12
        assert abs(report.residual) <= 1e-10


def test_theorem1_witness_at_the_edges_of_a0():
    assert witness_theorem1(1e-16).difference <= 1e-8
    assert witness_theorem1(0.9999999999999999).difference <= 1e-8


def test_theorem_a_witness_small_parameter():
    report = witness_theorem_a(1e-4)
    assert report.threshold_predicted > 0.999
    assert report.difference <= 1e-8
    with pytest.raises(DomainError):
        witness_theorem_a(0.0)


def test_theorem2_witness():
    for lam in (0.2, 0.5, 0.9):
        assert witness_theorem2(lam).difference <= 1e-8


def test_theorem3_witness():
    report = witness_theorem3()
    assert abs(report.threshold_found - 0.128445) < 5e-7
    assert abs(report.threshold_found - solve_rg().value) <= 1e-8


def test_witness_domains():
    with pytest.raises(DomainError):
        sharpness_witness_thmB(1.0, 1.0)
    with pytest.raises(DomainError):
        sharpness_witness_thmB(0.5, 3.0)
    with pytest.raises(DomainError):
        witness_theorem1(0.0)
