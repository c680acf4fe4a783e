"""Simulation and closed-form parameter recovery for biphoton polarization qutrits."""

from .core import (
    Constraint,
    PhasePair,
    QutritState,
    assemble,
    canonicalize,
    fidelity,
    normalize,
    random_qutrit,
    wrap_phase,
)
from .jones import apply_single, induced_qutrit_map, jones, to_diagonal_basis
from .measurement import (
    CONFIGS,
    CountTable,
    MeasurementConfig,
    OutcomeProbabilities,
    estimate_probs,
    ideal_plan,
    outcome_probabilities,
    run_plan,
    sample_counts,
    simulate_counts,
)
from .reconstruction import ReconstructionReport, reconstruct, reconstruct_counts

__version__ = "0.1.0"
