"""Jones matrices and their action on qutrit coefficients.

Conventions: column vectors in the (H, V) basis, operators act on the left.
Qutrit coefficient vectors are ordered ``(C1, C2, C3)`` for
``|2_H>, |1_H,1_V>, |2_V>``.
"""

from __future__ import annotations

import numpy as np

from .exceptions import NonUnitary

SQRT_I = np.exp(1j * np.pi / 4)
UNITARY_TOL = 1e-12

EIGHTH_WAVE = np.pi / 4
QUARTER_WAVE = np.pi / 2
HALF_WAVE = np.pi


def jones(alpha: float, phi: float) -> np.ndarray:
    """Jones matrix of a lossless retarder.

    Parameters
    ----------
    alpha : float
        Optical axis angle from horizontal, radians.
    phi : float
        Extra phase acquired by the component orthogonal to the axis, radians.
    """
    c, s = np.cos(alpha), np.sin(alpha)
    e = np.exp(1j * phi)
    off = (1 - e) * s * c
    return np.array([[c * c + e * s * s, off], [off, e * c * c + s * s]], dtype=complex)


def analyzer(theta: float) -> np.ndarray:
    """Rows are the transmission axes of a linear polarizer pair (theta, theta+90deg).

    Used as a change of basis: ``analyzer(theta) @ v`` gives the amplitudes of
    ``v`` along the two polarizer axes.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]], dtype=complex)


def is_unitary(m: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    m = np.asarray(m)
    n = m.shape[0]
    return bool(np.allclose(m.conj().T @ m, np.eye(n), rtol=0, atol=tol))


def apply_single(j: np.ndarray, v) -> np.ndarray:
    return np.asarray(j, dtype=complex) @ np.asarray(v, dtype=complex)


def induced_qutrit_map(j: np.ndarray) -> np.ndarray:
    """3x3 matrix by which ``J`` applied to both photons acts on ``(C1, C2, C3)``.

    Column k is the image of the k-th two-photon basis state.
    """
    j = np.asarray(j, dtype=complex)
    if j.shape != (2, 2) or not is_unitary(j):
        raise NonUnitary("Jones matrix must be a 2x2 unitary")
    (a, b), (c, d) = j
    r2 = np.sqrt(2.0)
    return np.array(
        [
            [a * a, r2 * a * b, b * b],
            [r2 * a * c, a * d + b * c, r2 * b * d],
            [c * c, r2 * c * d, d * d],
        ],
        dtype=complex,
    )


def to_diagonal_basis(c) -> np.ndarray:
    """Re-express ``(C1, C2, C3)`` in the 45/135 degree basis."""
    c1, c2, c3 = np.asarray(c, dtype=complex)
    r2 = np.sqrt(2.0)
    return np.array(
        [(c1 + c3) / 2 + c2 / r2, (c3 - c1) / r2, (c1 + c3) / 2 - c2 / r2],
        dtype=complex,
    )
