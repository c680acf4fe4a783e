"""Seeded round-trip and shot-noise sweep drivers."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import Constraint, QutritState, fidelity, random_qutrit, wrap_phase
from .exceptions import QutritError
from .measurement import ideal_plan, simulate_counts
from .reconstruction import BRANCHES, reconstruct, reconstruct_counts

SWEEP_N = (1_000, 10_000, 100_000, 1_000_000)
SWEEP_COLUMNS = (
    "n_per_config",
    "trials",
    "median_infidelity",
    "p90_infidelity",
    "max_infidelity",
    "median_phase_error",
    "p90_phase_error",
    "failures",
)
CYCLE = ("any", "special", "noc2")


def trial_seeds(seed: int, index: int) -> tuple[int, int]:
    """(state seed, counts seed) for trial ``index``."""
    s = np.random.SeedSequence([int(seed), int(index)]).generate_state(2, np.uint64)
    return int(s[0]), int(s[1])


def trial_constraint(constraint: str, index: int) -> Constraint:
    if constraint == "cycle":
        return Constraint(CYCLE[index % len(CYCLE)])
    return Constraint(constraint)


def phase_error(est: QutritState, truth: QutritState) -> float:
    a, b = est.phases, truth.phases
    return max(abs(wrap_phase(a.phi1 - b.phi1)), abs(wrap_phase(a.phi3 - b.phi3)))


@dataclass(frozen=True)
class TrialResult:
    index: int
    truth: QutritState
    estimate: QutritState | None
    branch: str | None
    error: str | None = None

    @property
    def infidelity(self) -> float:
        return 1.0 if self.estimate is None else 1.0 - fidelity(self.estimate, self.truth)


def run_trial(index: int, seed: int, n_per_config: int = 0, constraint: str = "any") -> TrialResult:
    """Draw a state, simulate all five configurations and reconstruct.

    ``n_per_config == 0`` uses exact probabilities.
    """
    state_seed, count_seed = trial_seeds(seed, index)
    truth = random_qutrit(state_seed, trial_constraint(constraint, index))
    try:
        if n_per_config > 0:
            rep = reconstruct_counts(simulate_counts(truth, n_per_config, count_seed))
        else:
            rep = reconstruct(ideal_plan(truth))
    except QutritError as exc:
        return TrialResult(index, truth, None, None, type(exc).__name__)
    return TrialResult(index, truth, rep.state, rep.branch)


def run_trials(trials: int, seed: int, n_per_config: int = 0, constraint: str = "any") -> list[TrialResult]:
    return [run_trial(i, seed, n_per_config, constraint) for i in range(trials)]


def roundtrip_summary(results: list[TrialResult], n_per_config: int = 0) -> dict:
    inf = np.array([r.infidelity for r in results])
    branches = Counter(r.branch for r in results if r.branch)
    failures = Counter(r.error for r in results if r.error)
    return {
        "trials": len(results),
        "mode": "sampled" if n_per_config > 0 else "ideal",
        "n_per_config": int(n_per_config),
        "min_fidelity": float(1.0 - inf.max()),
        "mean_infidelity": float(inf.mean()),
        "median_infidelity": float(np.median(inf)),
        "max_infidelity": float(inf.max()),
        "branches": {b: branches.get(b, 0) for b in BRANCHES},
        "failures": dict(sorted(failures.items())),
    }


def sweep(trials: int, seed: int, n_values=SWEEP_N, constraint: str = "any") -> list[dict]:
    """Infidelity and phase-error percentiles versus counts per configuration.

    The same ``trials`` states are reused at every ``n``.
    """
    rows = []
    for n in n_values:
        res = run_trials(trials, seed, int(n), constraint)
        inf = np.array([r.infidelity for r in res])
        ok = [r for r in res if r.estimate is not None]
        perr = np.array([phase_error(r.estimate, r.truth) for r in ok]) if ok else np.array([np.nan])
        rows.append(
            {
                "n_per_config": int(n),
                "trials": trials,
                "median_infidelity": float(np.median(inf)),
                "p90_infidelity": float(np.percentile(inf, 90)),
                "max_infidelity": float(inf.max()),
                "median_phase_error": float(np.median(perr)),
                "p90_phase_error": float(np.percentile(perr, 90)),
                "failures": len(res) - len(ok),
            }
        )
    return rows


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: format(v, ".17g") if isinstance(v, float) else v for k, v in row.items()})
    return buf.getvalue()
