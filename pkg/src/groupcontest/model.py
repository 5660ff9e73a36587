"""Game data for two-group contests with within-group sabotage.

Two groups compete over a prize that is a public good for some members
(positive valuation) and a public bad for others (negative valuation).
Each player chooses a constructive effort x >= 0 and a sabotage effort
y >= 0; a group's effective effort is the sum of its constructive
efforts minus theta times the sum of its sabotage efforts.

All types here are immutable values and all functions are pure, so
everything is safe to share freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


class ContestError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ContestError):
    """A candidate contest spec violates one of its invariants."""


class NonPositiveTheta(ValidationError):
    pass


class GroupTooSmall(ValidationError):
    pass


class ZeroValuation(ValidationError):
    pass


class OrderingViolated(ValidationError):
    pass


class SignViolated(ValidationError):
    pass


class ShapeMismatch(ContestError):
    """A strategy profile does not match the spec's group sizes."""


class UnknownPlayer(ContestError):
    """A player id points outside the spec's groups."""


@dataclass(frozen=True)
class GroupSpec:
    """One group's prize valuations, ordered from highest to lowest.

    A valid group has at least two players, valuations strictly
    decreasing at both ends (interior ties allowed), a strictly
    positive top valuation and a strictly negative bottom one.
    """

    valuations: tuple[float, ...]

    @property
    def size(self) -> int:
        return len(self.valuations)


@dataclass(frozen=True)
class ContestSpec:
    """Exogenous data of the game: two groups plus the sabotage
    effectiveness theta (> 0, dimensionless)."""

    group1: GroupSpec
    group2: GroupSpec
    theta: float

    def group(self, i: int) -> GroupSpec:
        if i == 1:
            return self.group1
        if i == 2:
            return self.group2
        raise UnknownPlayer(f"group must be 1 or 2, got {i}")

    def sizes(self) -> tuple[int, int]:
        return (self.group1.size, self.group2.size)

    def max_abs_valuation(self) -> float:
        return max(abs(v) for v in self.group1.valuations + self.group2.valuations)


@dataclass(frozen=True)
class PlayerId:
    """Identifies a player as (group, index) with index counted from 1
    in valuation order, matching the ordering inside GroupSpec."""

    group: int
    index: int


@dataclass(frozen=True)
class Effort:
    """One player's effort pair: constructive x and sabotage y."""

    x: float
    y: float


@dataclass(frozen=True)
class StrategyProfile:
    """Endogenous data of the game: an Effort for every player,
    organized as one tuple per group."""

    efforts: tuple[tuple[Effort, ...], tuple[Effort, ...]]

    @classmethod
    def zeros(cls, spec: ContestSpec) -> StrategyProfile:
        n1, n2 = spec.sizes()
        zero = Effort(0.0, 0.0)
        return cls(((zero,) * n1, (zero,) * n2))

    def effort(self, player: PlayerId) -> Effort:
        return self.efforts[player.group - 1][player.index - 1]

    def replace(self, player: PlayerId, x: float, y: float) -> StrategyProfile:
        """Return a copy with one player's efforts swapped out."""
        g = player.group - 1
        k = player.index - 1
        group = tuple(
            Effort(x, y) if j == k else e for j, e in enumerate(self.efforts[g])
        )
        if g == 0:
            return StrategyProfile((group, self.efforts[1]))
        return StrategyProfile((self.efforts[0], group))

    def sizes(self) -> tuple[int, int]:
        return (len(self.efforts[0]), len(self.efforts[1]))


@dataclass(frozen=True)
class EffectiveEffort:
    """Group-level effective efforts z_i = X_i - theta*Y_i plus, for
    every player, the residual contributed by the rest of her group:
    z_minus(i, k) = z_i - (x_ik - theta*y_ik)."""

    z1: float
    z2: float
    residuals: tuple[tuple[float, ...], tuple[float, ...]]

    def z(self, group: int) -> float:
        return self.z1 if group == 1 else self.z2

    def z_other(self, group: int) -> float:
        return self.z2 if group == 1 else self.z1

    def z_minus(self, player: PlayerId) -> float:
        return self.residuals[player.group - 1][player.index - 1]


def players(spec: ContestSpec) -> Iterator[PlayerId]:
    """Iterate players group 1 then group 2, in valuation order."""
    for i in (1, 2):
        for k in range(1, spec.group(i).size + 1):
            yield PlayerId(i, k)


def valuation(spec: ContestSpec, player: PlayerId) -> float:
    group = spec.group(player.group)
    if not 1 <= player.index <= group.size:
        raise UnknownPlayer(
            f"player index {player.index} outside group {player.group} "
            f"of size {group.size}"
        )
    return group.valuations[player.index - 1]


def _validate_group(i: int, group: GroupSpec) -> None:
    vals = group.valuations
    n = len(vals)
    if n < 2:
        raise GroupTooSmall(f"group {i} has {n} player(s); need at least 2")
    for k, v in enumerate(vals, start=1):
        if v == 0 or not math.isfinite(v):
            raise ZeroValuation(f"group {i} player {k} has valuation {v}")
    # Strictly decreasing at both ends, weakly decreasing in between.
    for k in range(n - 1):
        a, b = vals[k], vals[k + 1]
        strict = k == 0 or k == n - 2
        if (a <= b) if strict else (a < b):
            raise OrderingViolated(
                f"group {i}: valuations must satisfy "
                f"v1 > v2 >= ... >= v(n-1) > vn; "
                f"violated at positions {k + 1}, {k + 2} ({a} vs {b})"
            )
    if vals[0] <= 0 or vals[-1] >= 0:
        raise SignViolated(
            f"group {i}: top valuation must be positive and bottom negative "
            f"(got {vals[0]} and {vals[-1]})"
        )


def validate_spec(raw: ContestSpec) -> ContestSpec:
    """Check every spec invariant, returning the spec unchanged if all
    hold and raising the first violated one otherwise.

    Valuations are required pre-sorted descending; unsorted input is
    rejected rather than silently sorted, so player indices in all
    outputs keep their meaning.
    """
    if not (isinstance(raw.theta, (int, float)) and math.isfinite(raw.theta)) or raw.theta <= 0:
        raise NonPositiveTheta(f"theta must be a positive finite real, got {raw.theta}")
    _validate_group(1, raw.group1)
    _validate_group(2, raw.group2)
    return raw


def _check_shape(spec: ContestSpec, profile: StrategyProfile) -> None:
    if spec.sizes() != profile.sizes():
        raise ShapeMismatch(
            f"profile shape {profile.sizes()} does not match spec {spec.sizes()}"
        )


def effective_efforts(spec: ContestSpec, profile: StrategyProfile) -> EffectiveEffort:
    """Compute both groups' effective efforts and per-player residuals."""
    _check_shape(spec, profile)
    zs = []
    residuals = []
    for group in profile.efforts:
        x_total = sum(e.x for e in group)
        y_total = sum(e.y for e in group)
        z = x_total - spec.theta * y_total
        zs.append(z)
        residuals.append(tuple(z - (e.x - spec.theta * e.y) for e in group))
    return EffectiveEffort(zs[0], zs[1], (residuals[0], residuals[1]))


# --- canonical JSON documents -------------------------------------------
#
# Contest spec: {"theta": <number>,
#                "groups": [{"valuations": [...]}, {"valuations": [...]}]}
# Strategy profile: {"efforts": [[{"x": ..., "y": ...}, ...], [...]]}
# Exactly two groups, valuations in descending order.


def spec_from_dict(obj: dict) -> ContestSpec:
    """Build (and validate) a ContestSpec from its JSON document form."""
    try:
        theta = float(obj["theta"])
        groups = obj["groups"]
        if len(groups) != 2:
            raise ValidationError(f"expected exactly 2 groups, got {len(groups)}")
        g1, g2 = (
            GroupSpec(tuple(float(v) for v in g["valuations"])) for g in groups
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed contest spec document: {exc}") from exc
    return validate_spec(ContestSpec(g1, g2, theta))


def spec_to_dict(spec: ContestSpec) -> dict:
    return {
        "theta": spec.theta,
        "groups": [
            {"valuations": list(spec.group1.valuations)},
            {"valuations": list(spec.group2.valuations)},
        ],
    }


def profile_from_dict(obj: dict) -> StrategyProfile:
    try:
        groups = obj["efforts"]
        if len(groups) != 2:
            raise ValidationError(f"expected efforts for exactly 2 groups, got {len(groups)}")
        efforts = tuple(
            tuple(Effort(float(e["x"]), float(e["y"])) for e in group)
            for group in groups
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed profile document: {exc}") from exc
    profile = StrategyProfile(efforts)  # type: ignore[arg-type]
    for group in profile.efforts:
        for e in group:
            if e.x < 0 or e.y < 0 or not (math.isfinite(e.x) and math.isfinite(e.y)):
                raise ValidationError(f"efforts must be finite and nonnegative, got {e}")
    return profile


def profile_to_dict(profile: StrategyProfile) -> dict:
    return {
        "efforts": [
            [{"x": e.x, "y": e.y} for e in group] for group in profile.efforts
        ]
    }
