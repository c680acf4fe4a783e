"""Biphoton polarization qutrit state.

A state is ``C1|2_H> + C2|1_H,1_V> + C3|2_V>`` with complex amplitudes on
the unit sphere of C^3.  The global phase is unobservable; the canonical
gauge makes ``C2`` real and non-negative, falling back to ``C3`` and then
``C1`` when the preceding amplitude vanishes.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BadProbabilitySum, InputError, ZeroVector

GAUGE_EPS = 1e-12
NORM_TOL = 1e-12
ZERO_NORM = 1e-15
PROB_SUM_TOL = 1e-6


class Constraint(str, enum.Enum):
    """Families of random test states."""

    ANY = "any"
    SPECIAL = "special"  # C3 = -C1
    NOC2 = "noc2"  # C2 = 0


def wrap_phase(x: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    w = math.pi - math.fmod(math.pi - x, 2 * math.pi)
    if w <= -math.pi:
        w += 2 * math.pi
    elif w > math.pi:
        w -= 2 * math.pi
    return w


@dataclass(frozen=True)
class PhasePair:
    phi1: float
    phi3: float
    delta: float

    @classmethod
    def from_phases(cls, phi1: float, phi3: float) -> PhasePair:
        phi1, phi3 = wrap_phase(phi1), wrap_phase(phi3)
        return cls(phi1, phi3, wrap_phase(phi1 - phi3))


@dataclass(frozen=True)
class QutritState:
    c1: complex
    c2: complex
    c3: complex

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise InputError(f"amplitude {name} is not finite: {v}")
            object.__setattr__(self, name, v)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3], dtype=complex)

    @classmethod
    def from_vector(cls, v) -> QutritState:
        c1, c2, c3 = (complex(x) for x in v)
        return cls(c1, c2, c3)

    @property
    def norm2(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2 + abs(self.c3) ** 2

    @property
    def magnitudes2(self) -> tuple[float, float, float]:
        """``(|C1|^2, |C2|^2, |C3|^2)``, i.e. ``(w_HH, w_HV_tot, w_VV)``."""
        return abs(self.c1) ** 2, abs(self.c2) ** 2, abs(self.c3) ** 2

    @property
    def phases(self) -> PhasePair:
        return PhasePair.from_phases(cmath.phase(self.c1), cmath.phase(self.c3))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm2 - 1.0) <= tol

    def is_canonical(self) -> bool:
        for c in (self.c2, self.c3, self.c1):
            if abs(c) >= GAUGE_EPS:
                return c.imag == 0.0 and c.real >= 0.0
        return True

    def validate(self, canonical: bool = False) -> QutritState:
        if not self.is_normalized():
            raise InputError(f"state not normalized: |C|^2 = {self.norm2!r}")
        if canonical and not self.is_canonical():
            raise InputError("state is not in canonical gauge")
        return self

    def to_dict(self) -> dict:
        return {k: [getattr(self, k).real, getattr(self, k).imag] for k in ("c1", "c2", "c3")}

    @classmethod
    def from_dict(cls, d: dict) -> QutritState:
        try:
            return cls(*(complex(float(d[k][0]), float(d[k][1])) for k in ("c1", "c2", "c3")))
        except (KeyError, IndexError, TypeError) as exc:
            raise InputError(f"malformed state record: {exc}") from exc


def normalize(c1: complex, c2: complex, c3: complex) -> QutritState:
    n = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2 + abs(c3) ** 2)
    if n < ZERO_NORM:
        raise ZeroVector("cannot normalize a zero amplitude vector")
    return QutritState(c1 / n, c2 / n, c3 / n)


def canonicalize(state: QutritState) -> QutritState:
    """Remove the global phase so the gauge-fixing amplitude is real and >= 0."""
    amps = [state.c1, state.c2, state.c3]
    for k in (1, 2, 0):
        mag = abs(amps[k])
        if mag >= GAUGE_EPS:
            rot = amps[k].conjugate() / mag
            out = [a * rot for a in amps]
            out[k] = complex(mag, 0.0)
            return QutritState(*out)
    return state


def fidelity(a: QutritState, b: QutritState) -> float:
    """Squared overlap ``|<a|b>|^2``; insensitive to global phase."""
    ov = a.c1.conjugate() * b.c1 + a.c2.conjugate() * b.c2 + a.c3.conjugate() * b.c3
    return min(1.0, abs(ov) ** 2)


def random_qutrit(seed: int, constraint: Constraint | str = Constraint.ANY) -> QutritState:
    """Draw a Haar-random qutrit (normalized complex Gaussian), then canonicalize.

    ``SPECIAL`` forces ``C3 = -C1`` and ``NOC2`` forces ``C2 = 0`` before
    normalization.
    """
    constraint = Constraint(constraint)
    x = np.random.default_rng(seed).standard_normal(6)
    c1, c2, c3 = complex(x[0], x[1]), complex(x[2], x[3]), complex(x[4], x[5])
    if constraint is Constraint.SPECIAL:
        c3 = -c1
    elif constraint is Constraint.NOC2:
        c2 = 0j
    return canonicalize(normalize(c1, c2, c3))


def assemble(w_hh: float, w_hv_tot: float, w_vv: float, phases: PhasePair) -> QutritState:
    """Build the canonical state from measured magnitudes and recovered phases."""
    total = w_hh + w_hv_tot + w_vv
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise BadProbabilitySum(f"probabilities sum to {total!r}, expected 1")
    c1 = math.sqrt(max(w_hh, 0.0)) * cmath.exp(1j * phases.phi1)
    c2 = complex(math.sqrt(max(w_hv_tot, 0.0)), 0.0)
    c3 = math.sqrt(max(w_vv, 0.0)) * cmath.exp(1j * phases.phi3)
    return canonicalize(normalize(c1, c2, c3))
