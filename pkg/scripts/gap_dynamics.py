#!/usr/bin/env python3
"""Probe play across the three theta regimes with best-response dynamics.

For a symmetric two-player-per-group contest, sweep theta from well
below the no-sabotage cutoff to well above the sabotage cutoff and run
seeded dynamics at each value.  Where a pure equilibrium exists the
iteration converges to it; inside the gap it cycles, which is the
empirical face of the nonexistence result.  Outcomes in the gap are
exploratory: nothing is claimed about what players "really" do there.
"""

import argparse

import numpy as np

from groupcontest import (
    ContestSpec,
    DynamicsStatus,
    GroupSpec,
    StrategyProfile,
    best_response_dynamics,
    classify,
    players,
    solve,
    thresholds,
    validate_spec,
)


def jittered(spec, seed, scale):
    rng = np.random.default_rng(seed)
    profile = StrategyProfile.zeros(spec)
    for p in players(spec):
        profile = profile.replace(p, float(rng.uniform(0, scale)), float(rng.uniform(0, scale)))
    return profile


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--c", type=float, default=1.0, help="common valuation magnitude")
    parser.add_argument("--seeds", type=int, default=3)
    parser.add_argument("--max-iters", type=int, default=1000)
    args = parser.parse_args()

    c = args.c
    base = validate_spec(ContestSpec(GroupSpec((c, -c)), GroupSpec((c, -c)), 1.0))
    cut = thresholds(base)
    print(f"cutoffs: no-sabotage <= {cut.theta_no_sabotage:.9g}, "
          f"sabotage >= {cut.theta_sabotage:.9g}")
    print(f"{'theta':>8} {'regime':>24} {'seed':>5} {'status':>10} {'iters':>6} {'period':>7}")

    for theta in np.geomspace(cut.theta_no_sabotage / 4, cut.theta_sabotage * 4, 9):
        spec = validate_spec(ContestSpec(base.group1, base.group2, float(theta)))
        regime, _ = classify(spec)
        for seed in range(args.seeds):
            result = best_response_dynamics(
                spec, jittered(spec, seed, 1e-3 * c), args.max_iters, "round_robin"
            )
            period = result.period if result.period is not None else "-"
            print(f"{theta:8.4f} {regime.value:>24} {seed:5d} "
                  f"{result.status.value:>10} {result.iterations:6d} {period:>7}")
            if result.status is DynamicsStatus.CONVERGED:
                target = solve(spec).profile
                drift = max(
                    max(abs(ea.x - eb.x), abs(ea.y - eb.y))
                    for ga, gb in zip(result.profile.efforts, target.efforts)
                    for ea, eb in zip(ga, gb)
                )
                assert drift < 1e-6, "converged away from the closed form"


if __name__ == "__main__":
    main()
