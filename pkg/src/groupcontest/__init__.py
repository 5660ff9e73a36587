"""Solver and verifier for two-group contests with within-group sabotage.

Computes closed-form pure-strategy Nash equilibria, classifies the
theta regimes in which they exist, and independently certifies or
refutes any strategy profile through deviation search.
"""

from .best_response import (
    AxisBestResponse,
    DomainError,
    br_negative_x,
    br_negative_y,
    br_positive_x,
    br_positive_y,
    group_best_effective_effort,
)
from .csf import (
    NonFiniteInput,
    WinProbabilities,
    p1_values,
    payoff,
    win_probability,
    win_probability_short,
)
from .equilibrium import (
    EmptyGrid,
    EquilibriumResult,
    NonPositiveGridPoint,
    Regime,
    RegionSample,
    Thresholds,
    classify,
    region_csv,
    region_sample,
    solve,
    thresholds,
)
from .model import (
    ContestError,
    ContestSpec,
    EffectiveEffort,
    Effort,
    GroupSpec,
    GroupTooSmall,
    NonPositiveTheta,
    OrderingViolated,
    PlayerId,
    ShapeMismatch,
    SignViolated,
    StrategyProfile,
    UnknownPlayer,
    ValidationError,
    ZeroValuation,
    effective_efforts,
    players,
    profile_from_dict,
    profile_to_dict,
    spec_from_dict,
    spec_to_dict,
    validate_spec,
    valuation,
)
from .verify import (
    ClassUnsatisfiable,
    Deviation,
    DynamicsResult,
    DynamicsStatus,
    ForbiddenClass,
    Refutation,
    RefutationFailed,
    VerificationReport,
    best_deviation,
    best_response_dynamics,
    default_epsilon,
    is_epsilon_nash,
    refute_class,
)

__all__ = [
    "AxisBestResponse",
    "ClassUnsatisfiable",
    "ContestError",
    "ContestSpec",
    "Deviation",
    "DomainError",
    "DynamicsResult",
    "DynamicsStatus",
    "EffectiveEffort",
    "Effort",
    "EmptyGrid",
    "EquilibriumResult",
    "ForbiddenClass",
    "GroupSpec",
    "GroupTooSmall",
    "NonFiniteInput",
    "NonPositiveGridPoint",
    "NonPositiveTheta",
    "OrderingViolated",
    "PlayerId",
    "Refutation",
    "RefutationFailed",
    "Regime",
    "RegionSample",
    "ShapeMismatch",
    "SignViolated",
    "StrategyProfile",
    "Thresholds",
    "UnknownPlayer",
    "ValidationError",
    "VerificationReport",
    "WinProbabilities",
    "ZeroValuation",
    "best_deviation",
    "best_response_dynamics",
    "br_negative_x",
    "br_negative_y",
    "br_positive_x",
    "br_positive_y",
    "classify",
    "default_epsilon",
    "effective_efforts",
    "group_best_effective_effort",
    "is_epsilon_nash",
    "p1_values",
    "payoff",
    "players",
    "profile_from_dict",
    "profile_to_dict",
    "refute_class",
    "region_csv",
    "region_sample",
    "solve",
    "spec_from_dict",
    "spec_to_dict",
    "thresholds",
    "validate_spec",
    "valuation",
    "win_probability",
    "win_probability_short",
]
