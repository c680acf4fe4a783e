"""Brute-force two-photon reference model.

The pair is held as a symmetric 2x2 amplitude ``a[x, y]`` over the
polarizations of photon 1 and photon 2.  Plates act on each photon index
separately and coincidences are projections onto product analyzer states.
Nothing here goes through the 3x3 qutrit maps in :mod:`biqutrit.jones`;
retarders are rebuilt from rotations so the two paths stay independent.
"""

from __future__ import annotations

import numpy as np

from .core import QutritState
from .exceptions import BadSetting

SETTINGS_DEG = (0.0, 90.0, 45.0, 135.0, 22.5, 112.5)

# config name -> (plate axis deg or None, plate retardance, first analyzer deg)
_ORACLE_CONFIGS = {
    "A": (None, 0.0, 0.0),
    "B": (None, 0.0, 45.0),
    "C": (0.0, np.pi / 4, 45.0),
    "D": (45.0, np.pi / 4, 0.0),
    "E": (None, 0.0, 22.5),
}


def _rot(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def retarder(alpha: float, phi: float) -> np.ndarray:
    """Retarder built as ``R(alpha) diag(1, e^{i phi}) R(-alpha)``."""
    return _rot(alpha) @ np.diag([1.0, np.exp(1j * phi)]) @ _rot(-alpha)


def embed(state: QutritState) -> np.ndarray:
    h = state.c2 / np.sqrt(2.0)
    return np.array([[state.c1, h], [h, state.c3]], dtype=complex)


def extract(a: np.ndarray) -> QutritState:
    return QutritState(a[0, 0], np.sqrt(2.0) * (a[0, 1] + a[1, 0]) / 2, a[1, 1])


def two_photon_transform(j: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Apply ``j`` to both photons: ``a'[x,y] = sum j[x,p] j[y,q] a[p,q]``."""
    out = np.zeros((2, 2), dtype=complex)
    for x in range(2):
        for y in range(2):
            for p in range(2):
                for q in range(2):
                    out[x, y] += j[x, p] * j[y, q] * a[p, q]
    return out


def _axis(deg: float) -> np.ndarray:
    if not any(np.isclose(deg, s) for s in SETTINGS_DEG):
        raise BadSetting(f"unsupported analyzer setting {deg!r} deg")
    t = np.deg2rad(deg)
    return np.array([np.cos(t), np.sin(t)], dtype=complex)


def projector_probability(a: np.ndarray, u_setting: float, l_setting: float) -> float:
    """Probability of an (upper, lower) coincidence behind analyzers at the given angles (deg).

    Over the four ordered settings of one analyzer pair these sum to 1.
    """
    eu, el = _axis(u_setting), _axis(l_setting)
    amp = sum(eu[x].conjugate() * el[y].conjugate() * a[x, y] for x in range(2) for y in range(2))
    return float(abs(amp) ** 2)


def class_probabilities(state: QutritState, config: str) -> tuple[float, float, float]:
    """``(p_uu, p_cross, p_ll)`` for a named configuration, by brute force."""
    try:
        axis, phi, first = _ORACLE_CONFIGS[config]
    except KeyError:
        raise BadSetting(f"unknown configuration {config!r}") from None
    a = embed(state)
    if axis is not None:
        a = two_photon_transform(retarder(np.deg2rad(axis), phi), a)
    second = first + 90.0
    return (
        projector_probability(a, first, first),
        projector_probability(a, first, second) + projector_probability(a, second, first),
        projector_probability(a, second, second),
    )
