import cmath
import math

import numpy as np
import pytest
from hypothesis import strategies as st

from biqutrit.core import QutritState, canonicalize, normalize

_RESULTS: list[str] = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion for the terminal summary."""

    def _record(label: str, ok: bool, detail: str = "") -> bool:
        _RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)


def state_from(c1, c2, c3) -> QutritState:
    return canonicalize(normalize(c1, c2, c3))


def special_state(r: float, phi: float) -> QutritState:
    """``C1 = r e^{i phi}, C2 = sqrt(1 - 2 r^2), C3 = -C1``."""
    c1 = r * cmath.exp(1j * phi)
    return QutritState(c1, math.sqrt(1 - 2 * r * r), -c1)


finite = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def qutrits(draw):
    x = np.array([draw(finite) for _ in range(6)])
    if np.linalg.norm(x) < 1e-3:
        x[2] = 1.0
    return state_from(complex(x[0], x[1]), complex(x[2], x[3]), complex(x[4], x[5]))


def oracle_plan(state: QutritState, configs="ABCDE"):
    """Outcome probabilities for each configuration, computed by the brute-force model."""
    from biqutrit import oracle
    from biqutrit.measurement import OutcomeProbabilities

    return {k: OutcomeProbabilities(*oracle.class_probabilities(state, k)) for k in configs}
