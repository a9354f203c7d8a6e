import logging
from dataclasses import asdict
from typing import Any, Callable, Dict, List, Tuple

import numpy as np
from langgraph.graph import END, StateGraph

from .bohr_functionals import distance_form_T, majorant, refined_functional
from .config_manager import LabSettings
from .errors import DomainError
from .function_library import half_plane_map, koebe, random_schwarz, random_unit_bounded
from .radius_solvers import (
    classical_bohr_radius,
    identity_errors,
    monotonicity_violations,
    p_family_radius,
    refined_radius,
    rstar_cardano,
    solve_r0,
    solve_r0_for_distance,
    solve_rg,
)
from .series_core import MAX_ORDER, one_series, scale
from .state import RadialEvalReport, SuiteReport, SuiteState, TrialOutcome, VerificationRecord
from .subordination_lab import (
    TRIPLE_FAMILIES,
    build_quasi,
    convex_bound_check,
    make_record,
    random_triple,
    univalent_bound_check,
    verify_functional_bound,
    verify_lemma1,
    verify_lemma2,
    verify_majorant_domination,
    verify_rogosinski,
    verify_rogosinski_shifted,
    witness_theorem_a,
)

logger = logging.getLogger(__name__)

P_FAMILY_EXPONENTS = (0.5, 1.0, 1.5, 2.0)
IDENTITY_TOL = 1e-14

Generator = Callable[[SuiteState, int, int], Any]
Checker = Callable[[SuiteState, int, Any], List[VerificationRecord]]


def _gate_record(label: str, ok: bool, r: float) -> VerificationRecord:
    """A pass/fail record for a coefficient gate, margin 1 or -1."""
    unit = RadialEvalReport(r=r, value=1.0)
    failed = RadialEvalReport(r=r, value=0.0 if ok else 2.0)
    return make_record(label, failed, unit, r)


def _schwarz_depth(seed: int, state: SuiteState) -> Tuple[int, int]:
    rng = np.random.default_rng(seed)
    return int(rng.integers(0, 2 ** 31)), int(rng.integers(0, state.max_depth + 1))


# Theorem A / B / p-family: unit-bounded population

def _unit_bounded(state: SuiteState, trial: int, seed: int):
    depth = 1 + int(np.random.default_rng(seed).integers(0, state.max_depth))
    return random_unit_bounded(seed, state.order, depth)


def _check_theorem_a(state: SuiteState, trial: int, f) -> List[VerificationRecord]:
    r = classical_bohr_radius()
    records = [verify_functional_bound("thmA_majorant", majorant(f, r), 1.0, state.comparison_tol)]
    if trial == 0:
        witness = witness_theorem_a(0.99)
        found = RadialEvalReport(r=r, value=witness.threshold_found)
        records.append(make_record("thmA_sharpness_above", RadialEvalReport(r=r, value=r), found, r))
        records.append(
            make_record("thmA_sharpness_below", found, RadialEvalReport(r=r, value=r + 0.01), r)
        )
    return records


def _check_theorem_b(state: SuiteState, trial: int, f) -> List[VerificationRecord]:
    a0 = abs(f[0])
    r = refined_radius(a0) - state.boundary_offset
    squared = 0.5 - state.boundary_offset
    return [
        verify_functional_bound("thmB_p1", refined_functional(f, r, 1.0), 1.0, state.comparison_tol),
        verify_functional_bound("thmB_p2", refined_functional(f, squared, 2.0), 1.0, state.comparison_tol),
    ]


def _check_p_family(state: SuiteState, trial: int, f) -> List[VerificationRecord]:
    a0 = abs(f[0])
    records = []
    for p in P_FAMILY_EXPONENTS:
        r = p_family_radius(a0, p) - state.boundary_offset
        records.append(
            verify_functional_bound(f"pfamily_p{p:g}", refined_functional(f, r, p), 1.0, state.comparison_tol)
        )
    return records


# Theorems 1 and 2: subordination to the half-plane map

def _half_plane_instance(state: SuiteState, trial: int, seed: int):
    rng = np.random.default_rng(seed)
    a0 = float(rng.uniform(0.05, 0.95))
    omega_seed, depth = _schwarz_depth(int(rng.integers(0, 2 ** 31)), state)
    g = half_plane_map(a0, state.order)
    omega = random_schwarz(omega_seed, state.order, depth)
    return a0, build_quasi(one_series(state.order), omega, g, state.cauchy_radius)


def _check_theorem1(state: SuiteState, trial: int, instance) -> List[VerificationRecord]:
    a0, triple = instance
    records = []
    for label, r in (("thm1_r0", solve_r0(a0).value), ("thm1_rstar", rstar_cardano())):
        r -= state.boundary_offset
        records.append(
            verify_functional_bound(label, refined_functional(triple.f, r, 1.0), 1.0, state.comparison_tol)
        )
    return records


def _check_theorem2(state: SuiteState, trial: int, instance) -> List[VerificationRecord]:
    a0, triple = instance
    lam = 1.0 - a0
    records = [_gate_record("thm2_convex_coefficients", convex_bound_check(triple.g, lam), 0.0)]
    for label, r in (("thm2_r0", solve_r0_for_distance(lam).value), ("thm2_rstar", rstar_cardano())):
        r -= state.boundary_offset
        records.append(
            verify_functional_bound(label, distance_form_T(triple.f, r, lam), lam, state.comparison_tol)
        )
    return records


# Theorem 3: subordination to a scaled Koebe function

def _koebe_instance(state: SuiteState, trial: int, seed: int):
    rng = np.random.default_rng(seed)
    c = float(rng.uniform(0.4, 4.0))
    omega_seed, depth = _schwarz_depth(int(rng.integers(0, 2 ** 31)), state)
    g = scale(koebe(state.order), c)
    omega = random_schwarz(omega_seed, state.order, depth)
    return c / 4.0, build_quasi(one_series(state.order), omega, g, state.cauchy_radius)


def _check_theorem3(state: SuiteState, trial: int, instance) -> List[VerificationRecord]:
    lam, triple = instance
    r = solve_rg().value - state.boundary_offset
    return [
        _gate_record("thm3_univalent_coefficients", univalent_bound_check(triple.g, lam), 0.0),
        verify_functional_bound("thm3_rg", distance_form_T(triple.f, r, lam), lam, state.comparison_tol),
    ]


# Lemma suites

LEMMA_RADII = (0.1, 0.2, 0.3)


def _lemma_radii(state: SuiteState) -> Tuple[float, ...]:
    return LEMMA_RADII + (classical_bohr_radius() - state.boundary_offset,)


def _quasi_instance(state: SuiteState, trial: int, seed: int):
    family = TRIPLE_FAMILIES[trial % len(TRIPLE_FAMILIES)]
    return random_triple(seed, state.order, state.max_depth, family, cauchy_radius=state.cauchy_radius)


def _subordinate_instance(state: SuiteState, trial: int, seed: int):
    family = TRIPLE_FAMILIES[trial % len(TRIPLE_FAMILIES)]
    return random_triple(
        seed, state.order, state.max_depth, family, subordinate=True, cauchy_radius=state.cauchy_radius
    )


def _unit_bounded_instance(state: SuiteState, trial: int, seed: int):
    return random_triple(seed, state.order, state.max_depth, "unit_bounded", cauchy_radius=state.cauchy_radius)


def _check_lemma1(state: SuiteState, trial: int, triple) -> List[VerificationRecord]:
    records = []
    for r in _lemma_radii(state):
        records.append(verify_lemma1(triple, r, tol=state.comparison_tol))
        records.append(verify_majorant_domination(triple, r, state.comparison_tol))
    return records


def _check_lemma2(state: SuiteState, trial: int, triple) -> List[VerificationRecord]:
    return [verify_lemma2(triple, r, tol=state.comparison_tol) for r in _lemma_radii(state)]


def _check_rogosinski(state: SuiteState, trial: int, triple) -> List[VerificationRecord]:
    records = [verify_rogosinski(triple, r, state.comparison_tol) for r in (0.5, 0.9, 0.95)]
    records.append(verify_rogosinski_shifted(triple, 0.7, state.comparison_tol))
    return records


# Polynomial identities: a single deterministic trial

def _identity_instance(state: SuiteState, trial: int, seed: int):
    return identity_errors(), monotonicity_violations()


def _check_identities(state: SuiteState, trial: int, instance) -> List[VerificationRecord]:
    errors, violations = instance
    records = [
        verify_functional_bound(name, RadialEvalReport(r=0.0, value=error), IDENTITY_TOL, tol=0.0)
        for name, error in errors.items()
    ]
    records.extend(
        verify_functional_bound(name, RadialEvalReport(r=0.0, value=float(count)), 0.0, tol=0.0)
        for name, count in violations.items()
    )
    return records


SUITES: Dict[str, Tuple[Generator, Checker]] = {
    "thmA": (_unit_bounded, _check_theorem_a),
    "thmB": (_unit_bounded, _check_theorem_b),
    "pfamily": (_unit_bounded, _check_p_family),
    "thm1": (_half_plane_instance, _check_theorem1),
    "thm2_halfplane": (_half_plane_instance, _check_theorem2),
    "thm3_koebe": (_koebe_instance, _check_theorem3),
    "lemma1": (_quasi_instance, _check_lemma1),
    "lemma2": (_subordinate_instance, _check_lemma2),
    "rogosinski": (_unit_bounded_instance, _check_rogosinski),
    "identities": (_identity_instance, _check_identities),
}

SINGLE_TRIAL_SUITES = frozenset({"identities"})


def trial_seeds(seed: int, trials: int) -> List[int]:
    """Per-trial seeds drawn from the suite seed."""
    return [int(s) for s in np.random.default_rng(seed).integers(0, 2 ** 31, size=trials)]


class VerificationWorkflow:
    """LangGraph workflow that runs one verification suite."""

    def __init__(self, settings: LabSettings):
        self.settings = settings

        # Create the workflow graph
        self.workflow = self._create_workflow()

    def _create_workflow(self):
        """Create the LangGraph workflow."""
        workflow = StateGraph(SuiteState)

        workflow.add_node("generate", self._generate_node)
        workflow.add_node("check", self._check_node)
        workflow.add_node("collect_violations", self._collect_violations_node)
        workflow.add_node("aggregate", self._aggregate_node)

        workflow.set_entry_point("generate")
        workflow.add_edge("generate", "check")
        workflow.add_conditional_edges(
            "check",
            self._has_violations,
            {
                "collect": "collect_violations",
                "skip": "aggregate",
            },
        )
        workflow.add_edge("collect_violations", "aggregate")
        workflow.add_edge("aggregate", END)

        return workflow.compile()

    def _generate_node(self, state: SuiteState) -> Dict[str, Any]:
        """Draw the seeded population of the suite."""
        generator, _ = SUITES[state.suite]
        trials = 1 if state.suite in SINGLE_TRIAL_SUITES else state.trials
        seeds = trial_seeds(state.seed, trials)
        logger.info("Generating %d trial(s) for suite %s (seed %d)", trials, state.suite, state.seed)
        population = [(seed, generator(state, trial, seed)) for trial, seed in enumerate(seeds)]
        return {"population": population}

    def _check_node(self, state: SuiteState) -> Dict[str, Any]:
        """Run every check of the suite on every trial, in trial order."""
        _, checker = SUITES[state.suite]
        records = [checker(state, trial, instance) for trial, (_, instance) in enumerate(state.population)]
        failed = any(not record.passed for trial in records for record in trial)
        logger.info("Checked %d trial(s) of suite %s", len(records), state.suite)
        return {"records": records, "has_violations": failed}

    def _has_violations(self, state: SuiteState) -> str:
        return "collect" if state.has_violations else "skip"

    def _collect_violations_node(self, state: SuiteState) -> Dict[str, Any]:
        """List every failing record as trial:label@r."""
        violations = [
            f"trial {trial}: {record.label} at r={record.r:.17g} (margin {record.margin:.3e})"
            for trial, trial_records in enumerate(state.records)
            for record in trial_records
            if not record.passed
        ]
        for violation in violations:
            logger.warning("Violation in suite %s, %s", state.suite, violation)
        return {"violations": violations}

    def _aggregate_node(self, state: SuiteState) -> Dict[str, Any]:
        """Reduce per-trial records into a SuiteReport."""
        per_trial = []
        for trial, ((seed, _), records) in enumerate(zip(state.population, state.records)):
            worst = min(records, key=lambda record: record.margin)
            per_trial.append(
                TrialOutcome(
                    trial=trial,
                    seed=seed,
                    checks=len(records),
                    passed=all(record.passed for record in records),
                    worst_margin=worst.margin,
                    worst_label=worst.label,
                )
            )
        checks = sum(outcome.checks for outcome in per_trial)
        report = SuiteReport(
            suite=state.suite,
            seed=state.seed,
            trials=len(per_trial),
            order=state.order,
            passed=not state.violations,
            checks=checks,
            violations=len(state.violations),
            worst_margin=min(outcome.worst_margin for outcome in per_trial),
            per_trial=per_trial,
            violation_labels=list(state.violations),
        )
        logger.info("Suite %s finished: %d checks, %d violations", state.suite, checks, len(state.violations))
        return {"report": report}

    def create_initial_state(self, suite: str, seed: int, trials: int, order: int) -> SuiteState:
        if suite not in SUITES:
            raise DomainError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
        if trials < 1:
            raise DomainError(f"trials must be at least 1, got {trials}")
        if not 1 <= order <= MAX_ORDER:
            raise DomainError(f"order must lie in [1, {MAX_ORDER}], got {order}")
        return SuiteState(
            suite=suite,
            seed=seed,
            trials=trials,
            order=order,
            max_depth=self.settings.max_depth,
            boundary_offset=self.settings.boundary_offset,
            comparison_tol=self.settings.comparison_tol,
            cauchy_radius=self.settings.cauchy_radius,
        )

    def run(self, initial_state: SuiteState) -> SuiteReport:
        """Run the workflow with the given initial state."""
        final_state = self.workflow.invoke(asdict(initial_state))
        if isinstance(final_state, dict):
            return final_state["report"]
        return final_state.report
