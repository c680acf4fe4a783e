"""Command-line front end.

    biqutrit gen --seed 7 --constraint special --out state.json
    biqutrit simulate state.json --n-per-config 100000 --seed 1 --out plan.json
    biqutrit reconstruct plan.json --truth state.json
    biqutrit roundtrip --trials 1000 --ideal --constraint cycle
    biqutrit sweep --trials 200 --seed 0 --out sweep.csv

Exit status: 0 on success, 1 when an input violates an invariant (bad state,
probabilities or counts, unparsable file), 2 on contract errors such as a
missing configuration.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .core import QutritState, fidelity, random_qutrit
from .exceptions import ContractError, InputError
from .experiments import SWEEP_N, roundtrip_summary, run_trials, sweep, sweep_csv
from .measurement import (
    CountTable,
    ideal_plan,
    plan_to_records,
    records_to_plan,
    simulate_counts,
)
from .reconstruction import reconstruct, reconstruct_counts

BOOTSTRAP_RESAMPLES = 200


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_state(path: str) -> QutritState:
    data = jsonio.load_file(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a state object")
    return QutritState.from_dict(data).validate()


def _sampled(args) -> bool:
    return not args.ideal and args.n_per_config > 0


def cmd_gen(args) -> str:
    return jsonio.dumps(random_qutrit(args.seed, args.constraint).to_dict())


def cmd_simulate(args) -> str:
    state = _load_state(args.state)
    if _sampled(args):
        plan = simulate_counts(state, args.n_per_config, args.seed)
    else:
        plan = ideal_plan(state)
    return jsonio.dumps(plan_to_records(plan))


def cmd_reconstruct(args) -> str:
    plan = records_to_plan(jsonio.load_file(args.plan))
    if plan and all(isinstance(v, CountTable) for v in plan.values()):
        report = reconstruct_counts(plan, n_boot=args.bootstrap, seed=args.seed)
    elif any(isinstance(v, CountTable) for v in plan.values()):
        raise InputError("plan mixes counts and probabilities")
    else:
        report = reconstruct(plan)
    out = report.to_dict()
    if args.truth:
        out["fidelity"] = fidelity(report.state, _load_state(args.truth))
    return jsonio.dumps(out)


def cmd_roundtrip(args) -> str:
    n = args.n_per_config if _sampled(args) else 0
    results = run_trials(args.trials, args.seed, n, args.constraint)
    return jsonio.dumps(roundtrip_summary(results, n))


def cmd_sweep(args) -> str:
    return sweep_csv(sweep(args.trials, args.seed, args.n_values, args.constraint))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _n_list(text: str) -> tuple[int, ...]:
    return tuple(_positive(t) for t in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biqutrit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, constraint_choices=("any", "special", "noc2")):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        if constraint_choices:
            p.add_argument("--constraint", choices=constraint_choices, default="any")

    p = sub.add_parser("gen", help="emit a seeded random canonical state")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("simulate", help="simulate configurations A-E for a state file")
    p.add_argument("state")
    common(p, None)
    p.add_argument("--n-per-config", type=_non_negative, default=0, help="0 means ideal probabilities")
    p.add_argument("--ideal", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("reconstruct", help="recover the state from a plan file")
    p.add_argument("plan")
    common(p, None)
    p.add_argument("--truth", default=None, help="state file to report fidelity against")
    p.add_argument("--bootstrap", type=_non_negative, default=BOOTSTRAP_RESAMPLES,
                   help="resamples for error bars on count plans (0 disables)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("roundtrip", help="simulate and reconstruct many random states")
    common(p, ("any", "special", "noc2", "cycle"))
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--n-per-config", type=_non_negative, default=0)
    p.add_argument("--ideal", action="store_true")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("sweep", help="infidelity vs counts per configuration (CSV)")
    common(p, ("any", "special", "noc2", "cycle"))
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--n-values", type=_n_list, default=SWEEP_N, help="comma-separated counts")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ContractError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
