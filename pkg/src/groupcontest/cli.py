"""Command-line front end.

Reads a contest-spec JSON document, dispatches to the solver, the
classifier, the verifier, the single-axis best-response rules, the
existence-region sweeps, or best-response dynamics, and emits JSON (CSV
for region sweeps).  All numeric output is rounded to 9 significant
digits so identical inputs produce byte-identical output.

Exit codes: 0 on success, 1 on validation/domain errors (diagnostic on
stderr, naming the violated invariant), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import best_response as br
from .csf import win_probability
from .equilibrium import classify, region_csv, region_sample, solve, thresholds
from .model import (
    ContestError,
    ContestSpec,
    StrategyProfile,
    players,
    profile_from_dict,
    profile_to_dict,
    spec_from_dict,
)
from .verify import best_response_dynamics, is_epsilon_nash


class UsageError(ContestError):
    pass


class SpecFileUnreadable(ContestError):
    pass


class MalformedJson(ContestError):
    pass


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFileUnreadable(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"{path} is not valid JSON: {exc}") from exc


def _round9(obj):
    """Round every float in a JSON-ish structure to 9 significant digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.9g}")
    if isinstance(obj, dict):
        return {k: _round9(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round9(v) for v in obj]
    return obj


def _emit(obj) -> None:
    print(json.dumps(_round9(obj), indent=2))


def _parse_grid(text: str) -> list[float]:
    """Parse MIN:MAX:STEPS into an inclusive evenly spaced grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be MIN:MAX:STEPS, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"grid must be MIN:MAX:STEPS, got {text!r}") from exc
    if steps < 1:
        raise UsageError(f"grid needs at least one step, got {steps}")
    return [float(v) for v in np.linspace(lo, hi, steps)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcontest",
        description="Solve, classify, and verify two-group sabotage contests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--spec", required=True, metavar="PATH",
                       help="contest-spec JSON document")
        p.add_argument("--format", choices=["json", "csv"],
                       default="csv" if name == "region" else "json")
        return p

    p = add("solve", "compute the closed-form equilibrium, if one exists")
    p.add_argument("--slack", action="store_true",
                   help="include distances from theta to both thresholds")

    p = add("classify", "report the existence regime and both thresholds")
    p.add_argument("--slack", action="store_true",
                   help="include distances from theta to both thresholds")

    p = add("verify", "check a profile for profitable deviations")
    p.add_argument("--profile", required=True, metavar="PATH")
    p.add_argument("--epsilon", type=float, default=None,
                   help="certification slack (default 1e-6 * max valuation)")

    p = add("br", "single-axis best response for explicit regime context")
    p.add_argument("--v", type=float, required=True, help="player valuation")
    p.add_argument("--z-minus", type=float, required=True,
                   help="rest of own group's effective effort")
    p.add_argument("--z-other", type=float, required=True,
                   help="other group's effective effort")
    p.add_argument("--theta", type=float, default=None,
                   help="sabotage effectiveness (needed for sabotage responses)")

    p = add("region", "existence-region sweep as CSV (or JSON)")
    p.add_argument("--figure", type=int, choices=[1, 2], required=True)
    p.add_argument("--fixed", type=float, required=True,
                   help="fixed stake: w for figure 1, t for figure 2")
    p.add_argument("--axis1", required=True, metavar="MIN:MAX:STEPS")
    p.add_argument("--axis2", required=True, metavar="MIN:MAX:STEPS")

    p = add("dynamics", "iterate best responses from an initial profile")
    p.add_argument("--profile", default=None, metavar="PATH",
                   help="initial profile (default: zeros plus seeded jitter)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=1000)
    p.add_argument("--order", choices=["simultaneous", "round-robin"],
                   default="round-robin")
    return parser


def _thresholds_dict(spec: ContestSpec) -> dict:
    cut = thresholds(spec)
    return {"no_sabotage": cut.theta_no_sabotage, "sabotage": cut.theta_sabotage}


def _slack_fields(spec: ContestSpec) -> dict:
    cut = thresholds(spec)
    return {
        "slack_no_sabotage": abs(spec.theta - cut.theta_no_sabotage),
        "slack_sabotage": abs(spec.theta - cut.theta_sabotage),
    }


def _cmd_solve(args, spec: ContestSpec) -> int:
    result = solve(spec)
    out = {
        "regime": result.regime.value,
        "boundary": result.boundary,
        "theta": spec.theta,
        "thresholds": _thresholds_dict(spec),
        "profile": None,
        "effective": None,
        "win_probabilities": None,
    }
    if result.profile is not None:
        eff = result.effective
        probs = win_probability(eff.z1, eff.z2)
        out["profile"] = profile_to_dict(result.profile)
        out["effective"] = {"z1": eff.z1, "z2": eff.z2}
        out["win_probabilities"] = {"p1": probs.p1, "p2": probs.p2}
    if args.slack:
        out.update(_slack_fields(spec))
    _emit(out)
    return 0


def _cmd_classify(args, spec: ContestSpec) -> int:
    regime, boundary = classify(spec)
    cut = thresholds(spec)
    out = {
        "regime": regime.value,
        "boundary": boundary,
        "theta": spec.theta,
        "thresholds": _thresholds_dict(spec),
        "slack": min(
            abs(spec.theta - cut.theta_no_sabotage),
            abs(spec.theta - cut.theta_sabotage),
        ),
    }
    if args.slack:
        out.update(_slack_fields(spec))
    _emit(out)
    return 0


def _cmd_verify(args, spec: ContestSpec) -> int:
    profile = profile_from_dict(_load_json(args.profile))
    report = is_epsilon_nash(spec, profile, args.epsilon)
    _emit(report.to_json_dict())
    return 0


def _cmd_br(args, spec: ContestSpec) -> int:
    v, z_minus, z_other = args.v, args.z_minus, args.z_other

    def need_theta() -> float:
        if args.theta is None:
            raise UsageError("--theta is required for sabotage best responses")
        return args.theta

    if v > 0 and z_other > 0:
        name, response = "br_positive_x", br.br_positive_x(v, z_minus, z_other)
    elif v < 0 and z_other > 0:
        name, response = "br_positive_y", br.br_positive_y(need_theta(), v, z_minus, z_other)
    elif v < 0 and z_other < 0:
        name, response = "br_negative_y", br.br_negative_y(need_theta(), v, z_minus, z_other)
    elif v > 0 and z_other < 0:
        name, response = "br_negative_x", br.br_negative_x(v, z_minus, z_other)
    else:
        raise br.DomainError(
            f"no best-response rule applies to v={v}, z_other={z_other}"
        )
    _emit({"operation": name, "effort": response.effort, "tie": response.tie})
    return 0


def _cmd_region(args, spec: ContestSpec) -> int:
    samples = region_sample(
        args.figure,
        args.fixed,
        _parse_grid(args.axis1),
        _parse_grid(args.axis2),
        theta=spec.theta if args.figure == 2 else None,
    )
    if args.format == "csv":
        sys.stdout.write(region_csv(samples))
    else:
        _emit([
            {"axis1": s.axis1, "axis2": s.axis2, "margin": s.margin,
             "in_region": s.in_region}
            for s in samples
        ])
    return 0


def _jittered_initial(spec: ContestSpec, seed: int) -> StrategyProfile:
    rng = np.random.default_rng(seed)
    scale = 1e-3 * spec.max_abs_valuation()
    profile = StrategyProfile.zeros(spec)
    for p in players(spec):
        profile = profile.replace(
            p, float(rng.uniform(0, scale)), float(rng.uniform(0, scale))
        )
    return profile


def _cmd_dynamics(args, spec: ContestSpec) -> int:
    if args.profile is not None:
        initial = profile_from_dict(_load_json(args.profile))
    else:
        initial = _jittered_initial(spec, args.seed)
    result = best_response_dynamics(
        spec, initial, args.max_iters, order=args.order.replace("-", "_")
    )
    last_delta = 0.0
    if len(result.trajectory) >= 2:
        a, b = result.trajectory[-2], result.trajectory[-1]
        last_delta = max(
            max(abs(ea.x - eb.x), abs(ea.y - eb.y))
            for ga, gb in zip(a.efforts, b.efforts)
            for ea, eb in zip(ga, gb)
        )
    _emit({
        "status": result.status.value,
        "iterations": result.iterations,
        "period": result.period,
        "last_delta": last_delta,
        "final_profile": profile_to_dict(result.profile),
    })
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "br": _cmd_br,
    "region": _cmd_region,
    "dynamics": _cmd_dynamics,
}


def run(argv: list[str]) -> int:
    """Parse argv, execute one command, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.format == "csv" and args.command != "region":
            raise UsageError("--format csv is only available for region sweeps")
        spec = spec_from_dict(_load_json(args.spec))
        return _COMMANDS[args.command](args, spec)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ContestError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
