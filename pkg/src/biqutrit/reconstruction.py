"""Closed-form recovery of (|C1|, |C2|, |C3|, phi1, phi3) from outcome probabilities.

Notation: ``w_hh = |C1|^2``, ``w_vv = |C3|^2``, ``w_hv_tot = |C2|^2`` (both
orderings of the cross class) and ``w_hv = w_hv_tot / 2`` (one ordering).
``delta = phi1 - phi3``.  ``S = C1 + C3`` and ``D = |S|^2`` is the
determinant of the 2x2 system solved for ``phi1``.

Inversion identities used below, all in the canonical gauge (C2 = c >= 0):

* B (45/135):        p_cross = (w_hh + w_vv - 2 sqrt(w_hh w_vv) cos delta) / 2
                     p_uu - p_ll = 2 sqrt(w_hv) Re S
* C (l/8@0, 45/135): p_cross = (w_hh + w_vv - 2 sqrt(w_hh w_vv) sin delta) / 2
* D (l/8@45, H/V):   p_cross = D / 4 + w_hv + sqrt(w_hv) Im S
                     p_uu    = w_hh + w_hv / 2 - sqrt(w_hh w_hv_tot) sin phi1   (C3 = -C1)
* E (22.5/112.5):    p_uu    = w_hh / 2 + w_hv_tot / 4
                               + sqrt(w_hh w_hv_tot / 2) cos phi1                (C3 = -C1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, NamedTuple

import numpy as np

from .core import PhasePair, QutritState, assemble, wrap_phase
from .exceptions import (
    DegenerateMagnitudes,
    InconsistentInput,
    MissingConfig,
    QutritError,
    SingularSystem,
)
from .measurement import (
    CONFIG_NAMES,
    CountTable,
    OutcomeProbabilities,
    estimate_probs,
    sample_counts,
)

DEGEN_EPS = 1e-6
DET_EPS = 1e-6
RESID_MAX_IDEAL = 1e-3
CLAMP_TOL = 1e-12  # rounding overshoot that is clipped without being reported

GENERIC = "Generic"
C2_ZERO = "C2Zero"
SPECIAL = "SpecialC1MinusC3"
MAGNITUDES_ONLY = "MagnitudesOnlyDegenerate"
BRANCHES = (GENERIC, C2_ZERO, SPECIAL, MAGNITUDES_ONLY)


def resid_max(n_tot: int | None) -> float:
    """Tolerance on |cos^2 + sin^2 - 1|: fixed for exact input, shot-noise scaled otherwise."""
    if not n_tot:
        return RESID_MAX_IDEAL
    return max(RESID_MAX_IDEAL, 20.0 / math.sqrt(n_tot))


class Magnitudes(NamedTuple):
    w_hh: float
    w_hv_tot: float
    w_vv: float

    @property
    def w_hv(self) -> float:
        return self.w_hv_tot / 2

    @property
    def abs_c(self) -> tuple[float, float, float]:
        return tuple(math.sqrt(max(w, 0.0)) for w in self)


class DeltaEstimate(NamedTuple):
    delta: float
    a_cos: float
    a_sin: float
    clamped: bool

    @property
    def residual(self) -> float:
        return abs(self.a_cos**2 + self.a_sin**2 - 1.0)


class PhaseSolve(NamedTuple):
    phi1: float
    cos_phi1: float
    sin_phi1: float
    determinant: float

    @property
    def residual(self) -> float:
        return abs(self.cos_phi1**2 + self.sin_phi1**2 - 1.0)


class SpecialSolve(NamedTuple):
    phi1: float
    phi3: float
    cos_phi1: float
    sin_phi1: float

    @property
    def residual(self) -> float:
        return abs(self.cos_phi1**2 + self.sin_phi1**2 - 1.0)


@dataclass(frozen=True)
class ReconstructionReport:
    state: QutritState
    delta: float
    branch: str
    determinant: float
    residual: float
    clamped: bool
    errors: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        d = {
            "state": self.state.to_dict(),
            "delta": self.delta,
            "branch": self.branch,
            "determinant": self.determinant,
            "residual": self.residual,
            "clamped": self.clamped,
        }
        if self.errors is not None:
            d["errors"] = self.errors
        return d


def _clamp(x: float) -> tuple[float, bool]:
    if x > 1.0:
        return 1.0, x > 1.0 + CLAMP_TOL
    if x < -1.0:
        return -1.0, x < -1.0 - CLAMP_TOL
    return x, False


def _require(probs: Mapping[str, OutcomeProbabilities], name: str) -> OutcomeProbabilities:
    try:
        return probs[name]
    except KeyError:
        raise MissingConfig(name) from None


def step1_magnitudes(a: OutcomeProbabilities) -> Magnitudes:
    return Magnitudes(a.p_uu, a.p_cross, a.p_ll)


def step23_delta(a: OutcomeProbabilities, b: OutcomeProbabilities, c: OutcomeProbabilities) -> DeltaEstimate:
    """Relative phase ``delta = phi1 - phi3`` from its cosine (B) and sine (C).

    Taken as ``atan2(A_sin, A_cos)``: the same angle as
    ``arccos(A_cos) * sign(A_sin)`` on consistent data, but without the loss
    of precision arccos suffers next to 0 and pi.
    """
    w = step1_magnitudes(a)
    if w.w_hh * w.w_vv <= DEGEN_EPS**2:
        raise DegenerateMagnitudes("delta is undefined when |C1| or |C3| vanishes")
    denom = 2.0 * math.sqrt(w.w_hh * w.w_vv)
    # w_{45,135} = p_cross / 2, so 4 w_{45,135} = 2 p_cross
    a_cos = (w.w_hh + w.w_vv - 2.0 * b.p_cross) / denom
    a_sin = (w.w_hh + w.w_vv - 2.0 * c.p_cross) / denom
    cos_c, k1 = _clamp(a_cos)
    sin_c, k2 = _clamp(a_sin)
    delta = math.atan2(sin_c + 0.0, cos_c)  # + 0.0 maps -0.0 to +0.0, so sign(0) = +1
    return DeltaEstimate(wrap_phase(delta), a_cos, a_sin, k1 or k2)


def determinant(w: Magnitudes, delta: float) -> float:
    """``|C1 + C3|^2 = w_hh + w_vv + 2 sqrt(w_hh w_vv) cos delta``."""
    return w.w_hh + w.w_vv + 2.0 * math.sqrt(max(w.w_hh * w.w_vv, 0.0)) * math.cos(delta)


def re_sum(w: Magnitudes, b: OutcomeProbabilities) -> float:
    """``Re(C1 + C3)`` from the 45/135 imbalance."""
    return (b.p_uu - b.p_ll) / (2.0 * math.sqrt(w.w_hv))


def im_sum(w: Magnitudes, det: float, d: OutcomeProbabilities) -> float:
    """``Im(C1 + C3)`` from the cross class behind the lambda/8 @ 45 plate."""
    sq = math.sqrt(w.w_hv)
    return (d.p_cross - w.w_hv - det / 4.0) / sq


def step4_phase(
    w: Magnitudes, delta: float, b: OutcomeProbabilities, d: OutcomeProbabilities
) -> PhaseSolve:
    """Solve for ``phi1`` via Cramer's rule.

    With ``p = sqrt(w_hh) + sqrt(w_vv) cos delta`` and ``q = sqrt(w_vv) sin delta``::

        [ p  q ] [cos phi1]   [Re S]
        [-q  p ] [sin phi1] = [Im S]
    """
    if w.w_hv_tot <= DEGEN_EPS:
        raise DegenerateMagnitudes("C2 vanishes; use the C2Zero branch")
    det = determinant(w, delta)
    if det <= DET_EPS:
        raise SingularSystem(f"determinant {det:.3g} <= {DET_EPS:g}")
    r1, r3 = math.sqrt(w.w_hh), math.sqrt(w.w_vv)
    p = r1 + r3 * math.cos(delta)
    q = r3 * math.sin(delta)
    f = re_sum(w, b)
    g = im_sum(w, det, d)
    cos1 = (f * p - q * g) / det
    sin1 = (p * g + q * f) / det
    return PhaseSolve(math.atan2(sin1, cos1), cos1, sin1, det)


def step5_special(
    w: Magnitudes,
    d: OutcomeProbabilities,
    e: OutcomeProbabilities,
    n_tot: int | None = None,
    resid_tol: float | None = None,
) -> SpecialSolve:
    """``phi1`` and ``phi3 = phi1 -/+ pi`` for states with ``C3 = -C1``.

    ``sin phi1`` comes from config D's ``uu`` class and ``cos phi1`` from
    config E's ``uu`` class.  ``resid_tol`` overrides the consistency
    tolerance otherwise derived from ``n_tot``.
    """
    if w.w_hh * w.w_hv_tot <= DEGEN_EPS**2:
        # no C2 to reference the phase against: fix the gauge on C1
        return SpecialSolve(0.0, math.pi, 1.0, 0.0)
    root = math.sqrt(w.w_hh * w.w_hv_tot)
    sin1 = (w.w_hh + w.w_hv / 2.0 - d.p_uu) / root
    cos1 = (e.p_uu - w.w_hh / 2.0 - w.w_hv_tot / 4.0) / (root / math.sqrt(2.0))
    resid = abs(sin1**2 + cos1**2 - 1.0)
    if resid > (resid_tol if resid_tol is not None else resid_max(n_tot)):
        raise InconsistentInput(f"sin^2 + cos^2 deviates from 1 by {resid:.3g}")
    phi1 = math.atan2(sin1, cos1)
    phi3 = phi1 - math.pi if phi1 > 0.0 else phi1 + math.pi
    return SpecialSolve(phi1, phi3, cos1, sin1)


def reconstruct(
    probs: Mapping[str, OutcomeProbabilities], n_per_config: int | None = None
) -> ReconstructionReport:
    """Run the full protocol on per-configuration outcome probabilities.

    ``n_per_config`` is the number of coincidences behind each estimate, or
    ``None`` for exact probabilities; it only sets the consistency tolerance.
    """
    a = _require(probs, "A")
    b = _require(probs, "B")
    w = step1_magnitudes(a)
    small_hh, small_vv = w.w_hh < DEGEN_EPS, w.w_vv < DEGEN_EPS
    small_c2 = w.w_hv_tot < DEGEN_EPS
    # delta is measurable whenever both outer amplitudes are non-negligible jointly
    has_delta = w.w_hh * w.w_vv > DEGEN_EPS**2

    if small_hh and small_vv:
        state = assemble(*w, PhasePair.from_phases(0.0, 0.0))
        return ReconstructionReport(state, 0.0, MAGNITUDES_ONLY, determinant(w, 0.0), 0.0, False)

    if small_c2:
        if not has_delta:
            state = assemble(*w, PhasePair.from_phases(0.0, 0.0))
            return ReconstructionReport(state, 0.0, C2_ZERO, determinant(w, 0.0), 0.0, False)
        dest = step23_delta(a, b, _require(probs, "C"))
        state = assemble(*w, PhasePair.from_phases(dest.delta, 0.0))
        return ReconstructionReport(
            state, dest.delta, C2_ZERO, determinant(w, dest.delta), dest.residual, dest.clamped
        )

    if not has_delta:
        # Only one of C1, C3 carries weight: its phase is arg(C1 + C3).
        sol = step4_phase(w, 0.0, b, _require(probs, "D"))
        state = assemble(*w, PhasePair.from_phases(sol.phi1, sol.phi1))
        return ReconstructionReport(state, 0.0, GENERIC, sol.determinant, sol.residual, False)

    dest = step23_delta(a, b, _require(probs, "C"))
    det = determinant(w, dest.delta)
    if det <= DET_EPS:
        sp = step5_special(w, _require(probs, "D"), _require(probs, "E"), n_per_config)
        state = assemble(*w, PhasePair.from_phases(sp.phi1, sp.phi3))
        return ReconstructionReport(
            state, dest.delta, SPECIAL, det, max(dest.residual, sp.residual), dest.clamped
        )

    sol = step4_phase(w, dest.delta, b, _require(probs, "D"))
    phases = PhasePair.from_phases(sol.phi1, sol.phi1 - dest.delta)
    state = assemble(*w, phases)
    return ReconstructionReport(
        state, dest.delta, GENERIC, det, max(dest.residual, sol.residual), dest.clamped
    )


def reconstruct_counts(
    counts: Mapping[str, CountTable], n_boot: int = 0, seed: int = 0
) -> ReconstructionReport:
    """Reconstruct from coincidence counts, optionally with bootstrap error bars."""
    probs = {k: estimate_probs(c) for k, c in counts.items()}
    n = min(c.n_tot for c in counts.values())
    report = reconstruct(probs, n_per_config=n)
    if n_boot > 0:
        errs = bootstrap_errors(counts, report, n_boot=n_boot, seed=seed)
        report = replace(report, errors=errs)
    return report


def bootstrap_errors(
    counts: Mapping[str, CountTable], point: ReconstructionReport, n_boot: int = 200, seed: int = 0
) -> dict:
    """RMS spread of the recovered parameters about ``point`` over multinomial resamples."""
    rng = np.random.default_rng(seed)
    probs = {k: estimate_probs(c) for k, c in counts.items()}
    ref = _params(point.state, point.delta)
    rows = []
    failed = 0
    for _ in range(n_boot):
        resampled = {
            name: sample_counts(probs[name], counts[name].n_tot, rng) for name in sorted(counts)
        }
        try:
            rep = reconstruct_counts(resampled)
        except QutritError:
            failed += 1
            continue
        p = _params(rep.state, rep.delta)
        rows.append([p[0] - ref[0], p[1] - ref[1], p[2] - ref[2]] + [wrap_phase(x - y) for x, y in zip(p[3:], ref[3:])])
    keys = ("abs_c1", "abs_c2", "abs_c3", "phi1", "phi3", "delta")
    if rows:
        std = np.sqrt(np.mean(np.square(rows), axis=0))
        out = {k: float(s) for k, s in zip(keys, std)}
    else:
        out = {k: float("nan") for k in keys}
    out["resamples"] = len(rows)
    out["failed"] = failed
    return out


def _params(state: QutritState, delta: float) -> list[float]:
    ph = state.phases
    return [abs(state.c1), abs(state.c2), abs(state.c3), ph.phi1, ph.phi3, delta]


__all__ = [
    "BRANCHES",
    "CONFIG_NAMES",
    "DEGEN_EPS",
    "DET_EPS",
    "DeltaEstimate",
    "Magnitudes",
    "PhaseSolve",
    "ReconstructionReport",
    "SpecialSolve",
    "bootstrap_errors",
    "determinant",
    "reconstruct",
    "reconstruct_counts",
    "step1_magnitudes",
    "step23_delta",
    "step4_phase",
    "step5_special",
]
