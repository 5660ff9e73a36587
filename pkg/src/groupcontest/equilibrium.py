"""Existence thresholds, regime classification, and closed-form equilibria.

For a valid spec there are two theta thresholds, always strictly
ordered.  At or below the lower one a unique pure equilibrium without
sabotage exists (only the two highest-valuation players are active); at
or above the upper one a unique pure equilibrium with sabotage exists
(only the two lowest-valuation players are active, both sabotaging);
strictly between them no pure equilibrium exists at all.

``region_sample`` evaluates the existence conditions over parameter
grids, emitting margins so a plot can draw the boundary curve directly.
Grid points are independent; sweeps may be parallelized freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import (
    ContestError,
    ContestSpec,
    EffectiveEffort,
    PlayerId,
    StrategyProfile,
    effective_efforts,
)


class EmptyGrid(ContestError):
    pass


class NonPositiveGridPoint(ContestError):
    pass


class Regime(enum.Enum):
    NO_SABOTAGE = "NoSabotageEquilibrium"
    SABOTAGE = "SabotageEquilibrium"
    NO_PURE = "NoPureEquilibrium"


@dataclass(frozen=True)
class Thresholds:
    """The two theta cutoffs; theta_no_sabotage < theta_sabotage always."""

    theta_no_sabotage: float
    theta_sabotage: float


@dataclass(frozen=True)
class EquilibriumResult:
    regime: Regime
    profile: StrategyProfile | None
    effective: EffectiveEffort | None
    boundary: bool


@dataclass(frozen=True)
class RegionSample:
    """One grid point of an existence-region sweep.  margin >= 0 means
    the point satisfies the regime's existence condition."""

    axis1: float
    axis2: float
    in_region: bool
    margin: float


def thresholds(spec: ContestSpec) -> Thresholds:
    """Compute both existence cutoffs from the four extreme valuations.

    No sabotage requires theta <= v11*v21 / ((v11+v21) * max(|v1n|,|v2n|));
    all-sabotage requires theta >= |v1n+v2n| * max(v11,v21) / (v1n*v2n),
    the product in the denominator being positive since both bottom
    valuations are negative.
    """
    top1 = spec.group1.valuations[0]
    top2 = spec.group2.valuations[0]
    bot1 = spec.group1.valuations[-1]
    bot2 = spec.group2.valuations[-1]
    low = top1 * top2 / ((top1 + top2) * max(abs(bot1), abs(bot2)))
    high = abs(bot1 + bot2) * max(top1, top2) / (bot1 * bot2)
    return Thresholds(low, high)


def classify(spec: ContestSpec) -> tuple[Regime, bool]:
    """Regime tag for the spec's theta, plus a flag set when theta sits
    exactly on the binding threshold (weak inequalities include it)."""
    cut = thresholds(spec)
    if spec.theta <= cut.theta_no_sabotage:
        return Regime.NO_SABOTAGE, spec.theta == cut.theta_no_sabotage
    if spec.theta >= cut.theta_sabotage:
        return Regime.SABOTAGE, spec.theta == cut.theta_sabotage
    return Regime.NO_PURE, False


def solve(spec: ContestSpec) -> EquilibriumResult:
    """Construct the closed-form equilibrium for the spec's regime, or
    report that no pure equilibrium exists.

    Without sabotage the active efforts are
    x11 = v11^2*v21/(v11+v21)^2 and x21 = v11*v21^2/(v11+v21)^2; with
    sabotage, y1n = -v1n^2*v2n/(v1n+v2n)^2 and y2n = -v1n*v2n^2/(v1n+v2n)^2
    (both positive since the bottom valuations are negative).
    """
    regime, boundary = classify(spec)
    if regime is Regime.NO_PURE:
        return EquilibriumResult(regime, None, None, False)

    profile = StrategyProfile.zeros(spec)
    if regime is Regime.NO_SABOTAGE:
        a = spec.group1.valuations[0]
        b = spec.group2.valuations[0]
        denom = (a + b) ** 2
        profile = profile.replace(PlayerId(1, 1), a * a * b / denom, 0.0)
        profile = profile.replace(PlayerId(2, 1), a * b * b / denom, 0.0)
    else:
        a = spec.group1.valuations[-1]
        b = spec.group2.valuations[-1]
        denom = (a + b) ** 2
        profile = profile.replace(PlayerId(1, spec.group1.size), 0.0, -a * a * b / denom)
        profile = profile.replace(PlayerId(2, spec.group2.size), 0.0, -a * b * b / denom)
    return EquilibriumResult(regime, profile, effective_efforts(spec, profile), boundary)


def region_sample(
    figure: int,
    fixed: float,
    axis1_grid: Sequence[float] | Iterable[float],
    axis2_grid: Sequence[float] | Iterable[float],
    theta: float | None = None,
) -> list[RegionSample]:
    """Evaluate one figure's existence condition over a product grid.

    Figure 1 sweeps the two top valuations against a fixed adjusted
    bottom stake w: margin = a1*a2/(a1+a2) - w.  Figure 2 sweeps the two
    bottom valuation magnitudes against a fixed top valuation t at a
    given theta: margin = theta*m1*m2/(m1+m2) - t.
    """
    if figure not in (1, 2):
        raise ContestError(f"figure must be 1 or 2, got {figure}")
    if figure == 2 and (theta is None or theta <= 0):
        raise ContestError("figure 2 requires a positive theta")
    grid1 = list(axis1_grid)
    grid2 = list(axis2_grid)
    if not grid1 or not grid2:
        raise EmptyGrid("both axis grids must be non-empty")
    for g in (grid1, grid2):
        for value in g:
            if value <= 0:
                raise NonPositiveGridPoint(f"grid points must be positive, got {value}")
    scale = 1.0 if figure == 1 else theta
    samples = []
    for a1 in grid1:
        for a2 in grid2:
            margin = scale * a1 * a2 / (a1 + a2) - fixed
            samples.append(RegionSample(a1, a2, margin >= 0, margin))
    return samples


def region_csv(samples: Iterable[RegionSample]) -> str:
    """Render samples as CSV with a header row; floats carry 9
    significant digits, booleans print as true/false."""
    lines = ["axis1,axis2,margin,in_region"]
    for s in samples:
        lines.append(
            f"{s.axis1:.9g},{s.axis2:.9g},{s.margin:.9g},"
            f"{'true' if s.in_region else 'false'}"
        )
    return "\n".join(lines) + "\n"
