"""Forward model of the coincidence measurements.

Each configuration is an optional lambda/8 preprocessing plate followed by a
pair of identical polarizer settings in the upper and lower arms.  Three
outcome classes are recorded: both photons along the first polarizer axis
(``uu``), one along each (``cross``, both orderings summed) and both along
the second axis (``ll``).  Probabilities are conditional on the pair being
split at the beamsplitter.

Configurations::

    A  no plate        H/V analyzers
    B  no plate        45/135 analyzers
    C  lambda/8 @ 0    45/135 analyzers
    D  lambda/8 @ 45   H/V analyzers
    E  no plate        22.5/112.5 analyzers
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import QutritState
from .exceptions import EmptyCounts, InputError
from .jones import EIGHTH_WAVE, analyzer, induced_qutrit_map, jones, to_diagonal_basis

PROB_TOL = 1e-12
_SEED_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


class Plate(enum.Enum):
    NONE = "none"
    EIGHTH_AT_0 = "eighth@0"
    EIGHTH_AT_45 = "eighth@45"

    def matrix(self) -> np.ndarray:
        if self is Plate.NONE:
            return np.eye(2, dtype=complex)
        alpha = 0.0 if self is Plate.EIGHTH_AT_0 else np.pi / 4
        return jones(alpha, EIGHTH_WAVE)


class Basis(enum.Enum):
    HV = "hv"
    DIAG45 = "diag45"
    TILT22 = "tilt22"

    @property
    def angle(self) -> float:
        """Axis of the first polarizer, radians from horizontal."""
        return {Basis.HV: 0.0, Basis.DIAG45: np.pi / 4, Basis.TILT22: np.pi / 8}[self]


@dataclass(frozen=True)
class MeasurementConfig:
    name: str
    plate: Plate
    basis: Basis


CONFIGS: dict[str, MeasurementConfig] = {
    "A": MeasurementConfig("A", Plate.NONE, Basis.HV),
    "B": MeasurementConfig("B", Plate.NONE, Basis.DIAG45),
    "C": MeasurementConfig("C", Plate.EIGHTH_AT_0, Basis.DIAG45),
    "D": MeasurementConfig("D", Plate.EIGHTH_AT_45, Basis.HV),
    "E": MeasurementConfig("E", Plate.NONE, Basis.TILT22),
}
CONFIG_NAMES = tuple(CONFIGS)


@dataclass(frozen=True)
class OutcomeProbabilities:
    p_uu: float
    p_cross: float
    p_ll: float

    def __post_init__(self):
        for v in (self.p_uu, self.p_cross, self.p_ll):
            if not (-PROB_TOL <= v <= 1 + PROB_TOL):
                raise InputError(f"probability out of range: {v!r}")
        total = self.p_uu + self.p_cross + self.p_ll
        if abs(total - 1.0) > 1e-9:
            raise InputError(f"outcome probabilities sum to {total!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return self.p_uu, self.p_cross, self.p_ll


@dataclass(frozen=True)
class CountTable:
    n_uu: int
    n_ul: int
    n_lu: int
    n_ll: int

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise InputError("counts must be non-negative")

    @property
    def n_tot(self) -> int:
        return self.n_uu + self.n_ul + self.n_lu + self.n_ll

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.n_uu, self.n_ul, self.n_lu, self.n_ll


def resolve_config(config: MeasurementConfig | str) -> MeasurementConfig:
    if isinstance(config, MeasurementConfig):
        return config
    try:
        return CONFIGS[config]
    except KeyError:
        raise InputError(f"unknown configuration {config!r}") from None


@functools.lru_cache(maxsize=None)
def _transfer(plate: Plate, basis: Basis) -> np.ndarray:
    t = induced_qutrit_map(plate.matrix())
    if basis is Basis.DIAG45:
        return np.column_stack([to_diagonal_basis(col) for col in t.T])
    if basis is Basis.TILT22:
        return induced_qutrit_map(analyzer(basis.angle)) @ t
    return t


def transformed_coefficients(state: QutritState, config: MeasurementConfig | str) -> np.ndarray:
    config = resolve_config(config)
    return _transfer(config.plate, config.basis) @ state.vector


def outcome_probabilities(state: QutritState, config: MeasurementConfig | str) -> OutcomeProbabilities:
    p = np.abs(transformed_coefficients(state, config)) ** 2
    p = p / p.sum()
    return OutcomeProbabilities(float(p[0]), float(p[1]), float(p[2]))


def derive_seed(seed: int, index: int) -> int:
    """Independent per-stream seed: ``seed XOR index * golden-ratio constant``."""
    return (int(seed) ^ (int(index) * _SEED_MIX)) & _MASK64


def sample_counts(p: OutcomeProbabilities, n_tot: int, seed: int | np.random.Generator) -> CountTable:
    """Multinomial draw over (uu, ul, lu, ll); the cross class splits evenly."""
    if n_tot < 0:
        raise InputError("n_tot must be non-negative")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    probs = np.clip([p.p_uu, p.p_cross / 2, p.p_cross / 2, p.p_ll], 0.0, None)
    probs = probs / probs.sum()
    n = rng.multinomial(int(n_tot), probs)
    return CountTable(*(int(k) for k in n))


def estimate_probs(c: CountTable) -> OutcomeProbabilities:
    n = c.n_tot
    if n == 0:
        raise EmptyCounts("cannot estimate probabilities from zero counts")
    return OutcomeProbabilities(c.n_uu / n, (c.n_ul + c.n_lu) / n, c.n_ll / n)


def ideal_plan(state: QutritState, configs=CONFIG_NAMES) -> dict[str, OutcomeProbabilities]:
    return {name: outcome_probabilities(state, name) for name in configs}


def simulate_counts(
    state: QutritState, n_per_config: int, seed: int, configs=CONFIG_NAMES
) -> dict[str, CountTable]:
    out = {}
    for name in configs:
        idx = CONFIG_NAMES.index(name)
        out[name] = sample_counts(outcome_probabilities(state, name), n_per_config, derive_seed(seed, idx))
    return out


def run_plan(
    state: QutritState, n_per_config: int = 0, seed: int = 0, ideal: bool = False
) -> dict[str, OutcomeProbabilities]:
    """Probabilities for all five configurations, exact or estimated from counts."""
    if ideal:
        return ideal_plan(state)
    if n_per_config <= 0:
        raise InputError("n_per_config must be positive in sampled mode")
    counts = simulate_counts(state, n_per_config, seed)
    return {name: estimate_probs(c) for name, c in counts.items()}


def plan_to_records(plan: Mapping[str, OutcomeProbabilities | CountTable]) -> list[dict]:
    records = []
    for name in sorted(plan):
        item = plan[name]
        if isinstance(item, CountTable):
            records.append({"config": name, "counts": list(item.as_tuple())})
        else:
            records.append({"config": name, "probs": list(item.as_tuple())})
    return records


def records_to_plan(records) -> dict[str, OutcomeProbabilities | CountTable]:
    if not isinstance(records, list):
        raise InputError("plan must be a JSON array of records")
    plan = {}
    for rec in records:
        if not isinstance(rec, dict) or "config" not in rec:
            raise InputError(f"malformed plan record: {rec!r}")
        name = resolve_config(rec["config"]).name
        if "counts" in rec:
            vals = rec["counts"]
            if len(vals) != 4 or any(int(v) != v for v in vals):
                raise InputError(f"config {name}: counts must be four integers")
            plan[name] = CountTable(*(int(v) for v in vals))
        elif "probs" in rec:
            vals = rec["probs"]
            if len(vals) != 3:
                raise InputError(f"config {name}: probs must have three entries")
            plan[name] = OutcomeProbabilities(*(float(v) for v in vals))
        else:
            raise InputError(f"config {name}: record needs 'counts' or 'probs'")
    return plan
