"""Independent certification and refutation of strategy profiles.

``best_deviation`` searches one player's whole (x, y) strategy space
while everyone else stays put.  Along either axis the payoff is
piecewise smooth with at most one kink (where the player's own group's
effective effort changes sign), so a finite candidate set - corners,
kinks, interior stationary points, a dense safety grid, and one-step
neighbors of all of those - brackets the true optimum up to grid
refinement.  Candidates are scored in bulk and the winner's improvement
is recomputed exactly through the payoff function, which turns an
infinite-action equilibrium check into a finite certificate.

``refute_class`` mechanizes the deviation arguments that rule out whole
families of profiles (mixed-sign effective efforts, some zero effective
effort, wrong-axis effort, free riding violations): it samples seeded
random profiles inside a forbidden family and exhibits a strictly
improving deviation for every one of them.

``best_response_dynamics`` iterates best deviations from an initial
profile, reporting convergence, cycling, or exhaustion; it is an
empirical probe of the no-equilibrium gap, not a solver.

All functions are pure.  best_deviation calls for distinct players are
independent and may run in parallel; round-robin dynamics is inherently
sequential within an iteration.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import best_response as br
from .csf import p1_values, payoff
from .model import (
    ContestError,
    ContestSpec,
    PlayerId,
    StrategyProfile,
    effective_efforts,
    players,
    valuation,
)

SAFETY_GRID_POINTS = 512
GUARD_GRID_POINTS = 32
FIXED_POINT_TOL = 1e-9
CONVERGENCE_TOL = 1e-8
CYCLE_TOL = 1e-6


class ClassUnsatisfiable(ContestError):
    """The spec cannot realize the requested forbidden class."""


class RefutationFailed(ContestError):
    """A generated forbidden-class profile admitted no improving
    deviation.  Every class carries a constructive counter-move, so
    this indicates an implementation bug, not an open question."""


@dataclass(frozen=True)
class Deviation:
    """Best found unilateral move for one player.  ``improvement`` is
    the exact payoff gain, recomputed through the payoff function, and
    never negative (staying put is always a candidate)."""

    player: PlayerId
    new_x: float
    new_y: float
    improvement: float


@dataclass(frozen=True)
class VerificationReport:
    is_epsilon_nash: bool
    epsilon: float
    deviations: tuple[Deviation, ...]
    candidate_count: int

    def to_json_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "is_epsilon_nash": self.is_epsilon_nash,
            "players": [
                {
                    "group": d.player.group,
                    "index": d.player.index,
                    "best_improvement": d.improvement,
                    "deviation": {"x": d.new_x, "y": d.new_y},
                }
                for d in self.deviations
            ],
        }


class ForbiddenClass(enum.Enum):
    OPPOSITE_SIGNS = "OppositeSigns"
    SOME_ZERO_Z = "SomeZeroZ"
    STRADDLE_OR_WRONG_SIGN = "StraddleOrWrongSign"
    FREE_RIDER_VIOLATION = "FreeRiderViolation"


@dataclass(frozen=True)
class Refutation:
    """One sampled forbidden profile together with the strictly
    improving deviation that rules it out."""

    profile: StrategyProfile
    deviation: Deviation


class DynamicsStatus(enum.Enum):
    CONVERGED = "Converged"
    CYCLING = "Cycling"
    MAX_ITERS = "MaxIters"


@dataclass(frozen=True)
class DynamicsResult:
    status: DynamicsStatus
    profile: StrategyProfile
    iterations: int
    period: int | None
    trajectory: tuple[StrategyProfile, ...]


def default_epsilon(spec: ContestSpec) -> float:
    """Scale-aware certification slack: payoffs are linear in the
    valuations, so the tolerance follows their magnitude."""
    return 1e-6 * spec.max_abs_valuation()


def _axis_candidates(
    v: float,
    theta: float,
    z_minus: float,
    z_other: float,
    current: float,
    reach: float,
    step: float,
    axis: str,
) -> np.ndarray:
    """Candidate efforts along one axis: safety grid, corners, the kink
    where own-group effective effort crosses 0, interior stationary
    points valid for the post-deviation sign regime, the current
    effort, and one-step neighbors of everything."""
    specials = [0.0, current]
    if axis == "x":
        if z_minus < 0:
            specials.append(-z_minus)
        if v > 0 and z_other > 0:
            specials.append(br.br_positive_x(v, z_minus, z_other).effort)
        if v > 0 and z_minus < 0 and z_other < 0:
            specials.append(br.br_negative_x(v, z_minus, z_other).effort)
    else:
        if z_minus > 0:
            specials.append(z_minus / theta)
        if v < 0 and z_other < 0:
            specials.append(br.br_negative_y(theta, v, z_minus, z_other).effort)
        if v < 0 and z_minus > 0 and z_other > 0:
            specials.append(br.br_positive_y(theta, v, z_minus, z_other).effort)
    base = np.concatenate([np.linspace(0.0, reach, SAFETY_GRID_POINTS), specials])
    candidates = np.concatenate([base, base + step, base - step])
    candidates = candidates[np.isfinite(candidates)]
    return np.maximum(candidates, 0.0)


def _search(
    spec: ContestSpec, profile: StrategyProfile, player: PlayerId
) -> tuple[Deviation, int]:
    v = valuation(spec, player)
    theta = spec.theta
    eff = effective_efforts(spec, profile)
    z_minus = eff.z_minus(player)
    z_other = eff.z_other(player.group)
    current = profile.effort(player)

    reach = 4.0 * (spec.max_abs_valuation() + abs(z_minus) + abs(z_other))
    step = reach / (SAFETY_GRID_POINTS - 1)

    def score(xs, ys):
        z_own = z_minus + xs - theta * ys
        return v * p1_values(z_own, z_other) - xs - ys

    best_x, best_y, best_value = current.x, current.y, -math.inf
    count = 1  # the profile's own current point

    xs = _axis_candidates(v, theta, z_minus, z_other, current.x, reach, step, "x")
    vals = score(xs, 0.0)
    i = int(np.argmax(vals))
    if vals[i] > best_value:
        best_x, best_y, best_value = float(xs[i]), 0.0, float(vals[i])
    count += xs.size

    ys = _axis_candidates(v, theta, z_minus, z_other, current.y, reach, step, "y")
    vals = score(0.0, ys)
    i = int(np.argmax(vals))
    if vals[i] > best_value:
        best_x, best_y, best_value = 0.0, float(ys[i]), float(vals[i])
    count += ys.size

    # Coarse two-axis guard: exerting both effort types is always
    # dominated at an equilibrium, but arbitrary input profiles get the
    # benefit of the doubt.
    axis = np.linspace(0.0, reach, GUARD_GRID_POINTS)
    gx, gy = (g.ravel() for g in np.meshgrid(axis, axis))
    vals = score(gx, gy)
    i = int(np.argmax(vals))
    if vals[i] > best_value:
        best_x, best_y, best_value = float(gx[i]), float(gy[i]), float(vals[i])
    count += gx.size

    base_payoff = payoff(spec, profile, player)
    deviated = profile.replace(player, best_x, best_y)
    improvement = payoff(spec, deviated, player) - base_payoff
    if improvement <= 0.0:
        return Deviation(player, current.x, current.y, 0.0), count
    return Deviation(player, best_x, best_y, improvement), count


def best_deviation(
    spec: ContestSpec, profile: StrategyProfile, player: PlayerId
) -> Deviation:
    """Search one player's deviations, holding all others fixed."""
    deviation, _ = _search(spec, profile, player)
    return deviation


def is_epsilon_nash(
    spec: ContestSpec,
    profile: StrategyProfile,
    epsilon: float | None = None,
) -> VerificationReport:
    """Run best_deviation for every player; certify the profile as an
    epsilon-Nash equilibrium iff nobody improves by more than epsilon.

    epsilon defaults to 1e-6 times the largest valuation magnitude.
    """
    if epsilon is None:
        epsilon = default_epsilon(spec)
    if epsilon <= 0:
        raise ContestError(f"epsilon must be positive, got {epsilon}")
    deviations = []
    count = 0
    for p in players(spec):
        d, n = _search(spec, profile, p)
        deviations.append(d)
        count += n
    certified = all(d.improvement <= epsilon for d in deviations)
    return VerificationReport(certified, epsilon, tuple(deviations), count)


# --- forbidden-class sampling -------------------------------------------


def _log_uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(np.exp(rng.uniform(np.log(lo), np.log(hi))))


def _positive_players(spec: ContestSpec, group: int) -> list[int]:
    return [
        k
        for k, v in enumerate(spec.group(group).valuations, start=1)
        if v > 0
    ]


def _negative_players(spec: ContestSpec, group: int) -> list[int]:
    return [
        k
        for k, v in enumerate(spec.group(group).valuations, start=1)
        if v < 0
    ]


def _generate_forbidden(
    spec: ContestSpec, forbidden: ForbiddenClass, rng: np.random.Generator
) -> tuple[StrategyProfile, list[PlayerId]]:
    """Draw one profile inside the forbidden class; also return the
    players that the class's counter-argument targets, checked first."""
    s = spec.max_abs_valuation()
    lo, hi = s / 8.0, s / 2.0
    profile = StrategyProfile.zeros(spec)
    theta = spec.theta

    if forbidden is ForbiddenClass.OPPOSITE_SIGNS:
        i = int(rng.integers(1, 3))
        j = 3 - i
        builder = PlayerId(i, int(rng.choice(_positive_players(spec, i))))
        saboteur = PlayerId(j, int(rng.choice(_negative_players(spec, j))))
        profile = profile.replace(builder, _log_uniform(rng, lo, hi), 0.0)
        profile = profile.replace(saboteur, 0.0, _log_uniform(rng, lo, hi))
        return profile, [builder, saboteur]

    if forbidden is ForbiddenClass.SOME_ZERO_Z:
        i = int(rng.integers(1, 3))
        j = 3 - i
        suspects: list[PlayerId] = []
        if rng.random() < 0.5:
            # Zero by offset rather than idleness: top player builds,
            # bottom player sabotages it away exactly.
            t = _log_uniform(rng, lo, hi)
            profile = profile.replace(PlayerId(i, 1), theta * t, 0.0)
            profile = profile.replace(PlayerId(i, spec.group(i).size), 0.0, t)
        sign = rng.choice(["positive", "zero", "negative"])
        if sign == "positive":
            active = PlayerId(j, 1)
            profile = profile.replace(active, _log_uniform(rng, lo, hi), 0.0)
            suspects = [active]
        elif sign == "negative":
            active = PlayerId(j, spec.group(j).size)
            profile = profile.replace(active, 0.0, _log_uniform(rng, lo, hi))
            suspects = [active]
        return profile, suspects

    if forbidden is ForbiddenClass.STRADDLE_OR_WRONG_SIGN:
        i = int(rng.integers(1, 3))
        kind = rng.choice(["sabotaging_winner", "building_loser", "straddler"])
        if kind == "sabotaging_winner":
            culprit = PlayerId(i, int(rng.choice(_positive_players(spec, i))))
            profile = profile.replace(culprit, 0.0, _log_uniform(rng, lo, hi))
        elif kind == "building_loser":
            culprit = PlayerId(i, int(rng.choice(_negative_players(spec, i))))
            profile = profile.replace(culprit, _log_uniform(rng, lo, hi), 0.0)
        else:
            culprit = PlayerId(i, int(rng.choice(_positive_players(spec, i))))
            profile = profile.replace(
                culprit, _log_uniform(rng, lo, hi), _log_uniform(rng, lo, hi)
            )
        # Background activity in the other group keeps the sample generic.
        j = 3 - i
        if rng.random() < 0.5:
            profile = profile.replace(PlayerId(j, 1), _log_uniform(rng, lo, hi), 0.0)
        return profile, [culprit]

    # FreeRiderViolation: a non-extreme player is active and her own
    # first-order condition holds exactly, so the group's extreme player
    # strictly gains by joining in - the free-riding argument's target.
    builder_violators = []  # non-top positive players, (group, index)
    saboteur_violators = []  # non-bottom negative players
    for g in (1, 2):
        pos = _positive_players(spec, g)
        neg = _negative_players(spec, g)
        if len(pos) >= 2:
            builder_violators.extend((g, k) for k in pos[1:])
        if len(neg) >= 2:
            saboteur_violators.extend((g, k) for k in neg[:-1])
    if not builder_violators and not saboteur_violators:
        raise ClassUnsatisfiable(
            "free riding needs a group with two players of the same sign"
        )
    use_builders = bool(builder_violators) and (
        not saboteur_violators or rng.random() < 0.5
    )
    pool = builder_violators if use_builders else saboteur_violators
    g, k = pool[int(rng.integers(len(pool)))]
    j = 3 - g
    vals = spec.group(g).valuations
    if use_builders:
        vk = vals[k - 1]
        z_rival = rng.uniform(0.15, 0.5) * vk
        z_own = math.sqrt(vk * z_rival) - z_rival  # violator's stationary point
        profile = profile.replace(PlayerId(g, k), z_own, 0.0)
        profile = profile.replace(PlayerId(j, 1), z_rival, 0.0)
        target = PlayerId(g, 1)
    else:
        vh = abs(vals[k - 1])
        z_rival = rng.uniform(0.15, 0.5) * theta * vh
        rival = PlayerId(j, spec.group(j).size)
        profile = profile.replace(rival, 0.0, z_rival / theta)
        y_own = (math.sqrt(theta * vh * z_rival) - z_rival) / theta
        profile = profile.replace(PlayerId(g, k), 0.0, y_own)
        target = PlayerId(g, spec.group(g).size)
    return profile, [target]


def refute_class(
    spec: ContestSpec,
    forbidden: ForbiddenClass,
    samples: int,
    seed: int,
) -> list[Refutation]:
    """Sample ``samples`` profiles inside a forbidden class and refute
    each with a strictly improving deviation (threshold 1e-9 times the
    largest valuation magnitude).  Fully reproducible from the seed."""
    if samples < 1:
        raise ContestError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    tol = 1e-9 * spec.max_abs_valuation()
    records = []
    for _ in range(samples):
        profile, suspects = _generate_forbidden(spec, forbidden, rng)
        ordered = suspects + [p for p in players(spec) if p not in suspects]
        refuting = None
        for p in ordered:
            d = best_deviation(spec, profile, p)
            if d.improvement > tol:
                refuting = d
                break
        if refuting is None:
            raise RefutationFailed(
                f"no improving deviation found for a {forbidden.value} sample"
            )
        records.append(Refutation(profile, refuting))
    return records


# --- best-response dynamics ----------------------------------------------


def _flatten(profile: StrategyProfile) -> np.ndarray:
    return np.array(
        [value for group in profile.efforts for e in group for value in (e.x, e.y)]
    )


def best_response_dynamics(
    spec: ContestSpec,
    initial: StrategyProfile,
    max_iters: int,
    order: str = "round_robin",
) -> DynamicsResult:
    """Iterate best deviations from ``initial``.

    Each iteration updates every player once: ``round_robin`` applies
    moves immediately in player order, ``simultaneous`` computes all
    moves against the same profile and applies them together.  A
    profile where no player can improve by more than 1e-9 is a fixed
    point: the iteration stops as Converged once it reaches one, with
    the two successive profiles also required to agree within 1e-8 in
    the max norm.  Both conditions matter - under simultaneous play,
    near-standstill profiles can still hide large improvements that the
    players keep canceling for each other, and those must not count as
    converged.  Cycling means the latest profile recurred (within 1e-6)
    with period >= 2.
    """
    if max_iters < 1:
        raise ContestError(f"max_iters must be >= 1, got {max_iters}")
    if order not in ("round_robin", "simultaneous"):
        raise ContestError(f"order must be round_robin or simultaneous, got {order!r}")
    roster = list(players(spec))
    effective_efforts(spec, initial)  # shape check
    current = initial
    trajectory = [initial]
    history = [_flatten(initial)]

    for iteration in range(1, max_iters + 1):
        gain = 0.0
        if order == "round_robin":
            for p in roster:
                d = best_deviation(spec, current, p)
                gain = max(gain, d.improvement)
                current = current.replace(p, d.new_x, d.new_y)
        else:
            moves = [best_deviation(spec, current, p) for p in roster]
            gain = max(d.improvement for d in moves)
            if gain > FIXED_POINT_TOL:
                for p, d in zip(roster, moves):
                    current = current.replace(p, d.new_x, d.new_y)

        vec = _flatten(current)
        delta = float(np.max(np.abs(vec - history[-1])))
        trajectory.append(current)
        history.append(vec)
        if gain <= FIXED_POINT_TOL and delta <= CONVERGENCE_TOL:
            return DynamicsResult(
                DynamicsStatus.CONVERGED, current, iteration, None, tuple(trajectory)
            )
        if len(history) >= 3:
            past = np.stack(history[:-2])
            gaps = np.max(np.abs(past - vec), axis=1)
            hits = np.nonzero(gaps <= CYCLE_TOL)[0]
            if hits.size:
                period = len(history) - 1 - int(hits[-1])
                return DynamicsResult(
                    DynamicsStatus.CYCLING, current, iteration, period, tuple(trajectory)
                )
    return DynamicsResult(
        DynamicsStatus.MAX_ITERS, current, max_iters, None, tuple(trajectory)
    )
