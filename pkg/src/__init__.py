from .errors import BohrLabError, BracketError, DomainError, GrowthClaimError, NonVanishingConstantTerm
from .series_core import (
    BoundedBy,
    CauchyBound,
    Polynomial,
    ExactGeometric,
    LinearBy,
    TruncatedSeries,
    Unknown,
    add,
    compose,
    constant_series,
    evaluate,
    from_coefficients,
    identity_z,
    multiply,
    one_series,
    scale,
    zero_series,
)
from .function_library import (
    CanonicalFamily,
    FamilyTag,
    half_plane_map,
    koebe,
    moebius_phi_a,
    random_schwarz,
    random_unit_bounded,
)
from .bohr_functionals import (
    distance_form_T,
    full_norm_sq,
    half_plane_closed_form,
    half_plane_excess,
    koebe_distance_closed_form,
    majorant,
    majorant_nonconstant,
    norm_sq,
    refined_functional,
)
from .radius_solvers import (
    bisect_root,
    classical_bohr_radius,
    lambda_of_r,
    p_family_infimum,
    p_family_radius,
    phi_poly,
    psi_poly,
    refined_radius,
    rg_polynomial,
    rstar_bisect,
    rstar_cardano,
    rstar_polynomial,
    solve_r0,
    solve_r0_for_distance,
    solve_rg,
)
from .state import (
    JsonReport,
    RadialEvalReport,
    RadiusResult,
    SuiteReport,
    SuiteState,
    VerificationRecord,
    WitnessReport,
)
from .subordination_lab import (
    QuasiSubTriple,
    build_quasi,
    convex_bound_check,
    random_triple,
    sharpness_witness_thmB,
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
from .config_manager import ConfigManager, LabSettings
from .workflow import VerificationWorkflow
from .summary import SummaryRenderer

__all__ = [
    'BohrLabError', 'BracketError', 'DomainError', 'GrowthClaimError', 'NonVanishingConstantTerm',
    'BoundedBy', 'CauchyBound', 'Polynomial', 'ExactGeometric', 'LinearBy', 'TruncatedSeries', 'Unknown',
    'add', 'compose', 'constant_series', 'evaluate', 'from_coefficients', 'identity_z',
    'multiply', 'one_series', 'scale', 'zero_series',
    'CanonicalFamily', 'FamilyTag', 'half_plane_map', 'koebe', 'moebius_phi_a',
    'random_schwarz', 'random_unit_bounded',
    'distance_form_T', 'full_norm_sq', 'half_plane_closed_form', 'half_plane_excess',
    'koebe_distance_closed_form',
    'majorant', 'majorant_nonconstant', 'norm_sq', 'refined_functional',
    'bisect_root', 'classical_bohr_radius', 'lambda_of_r', 'p_family_infimum', 'p_family_radius',
    'phi_poly', 'psi_poly', 'refined_radius', 'rg_polynomial', 'rstar_bisect', 'rstar_cardano',
    'rstar_polynomial', 'solve_r0', 'solve_r0_for_distance', 'solve_rg',
    'JsonReport', 'RadialEvalReport', 'RadiusResult', 'SuiteReport', 'SuiteState',
    'VerificationRecord', 'WitnessReport',
    'QuasiSubTriple', 'build_quasi', 'convex_bound_check', 'random_triple', 'sharpness_witness_thmB',
    'univalent_bound_check', 'verify_lemma1', 'verify_lemma2', 'verify_rogosinski',
    'verify_rogosinski_shifted', 'witness_theorem1', 'witness_theorem2', 'witness_theorem3',
    'witness_theorem_a',
    'ConfigManager', 'LabSettings', 'VerificationWorkflow', 'SummaryRenderer',
]
