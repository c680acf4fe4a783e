import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biqutrit.core import (
    GAUGE_EPS,
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
from biqutrit.exceptions import BadProbabilitySum, InputError, ZeroVector
from conftest import qutrits

R2 = math.sqrt(2)


def close(a: QutritState, b: QutritState, tol=1e-14):
    return np.allclose(a.vector, b.vector, rtol=0, atol=tol)


class TestNormalize:
    def test_scales_basis_state(self):
        assert close(normalize(2, 0, 0), QutritState(1, 0, 0))

    def test_equal_weights(self):
        s = normalize(1 + 1j, 1 + 1j, 1 + 1j)
        assert np.allclose(np.abs(s.vector) ** 2, 1 / 3)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            normalize(0, 0, 0)

    @given(qutrits(), st.floats(0.1, 10))
    def test_direction_preserved(self, s, scale):
        t = normalize(*(scale * s.vector))
        assert abs(t.norm2 - 1) < 1e-12
        assert fidelity(s, t) > 1 - 1e-12


class TestCanonicalize:
    def test_real_state_unchanged(self):
        assert canonicalize(QutritState(1, 0, 0)) == QutritState(1, 0, 0)

    def test_removes_phase_on_c2(self):
        assert close(canonicalize(QutritState(0, 1j, 0)), QutritState(0, 1, 0))

    def test_falls_back_to_c3(self):
        s = canonicalize(QutritState(1j / R2, 0, 1j / R2))
        assert close(s, QutritState(1 / R2, 0, 1 / R2))

    def test_falls_back_to_c1(self):
        assert close(canonicalize(QutritState(-1j, 0, 0)), QutritState(1, 0, 0))

    def test_c2_below_gauge_eps_ignored(self):
        s = canonicalize(QutritState(0.6, GAUGE_EPS / 10 * 1j, -0.8j))
        assert s.c3.imag == 0.0 and s.c3.real > 0

    @given(qutrits(), st.floats(-math.pi, math.pi))
    def test_idempotent_and_physical(self, s, theta):
        rotated = QutritState(*(cmath.exp(1j * theta) * s.vector))
        once = canonicalize(rotated)
        assert canonicalize(once) == once
        assert once.is_canonical()
        assert fidelity(once, rotated) == pytest.approx(1, abs=1e-12)


class TestFidelity:
    def test_self(self):
        s = random_qutrit(5)
        assert fidelity(s, s) == pytest.approx(1, abs=1e-15)

    def test_orthogonal(self):
        assert fidelity(QutritState(1, 0, 0), QutritState(0, 1, 0)) == 0

    @given(qutrits(), st.floats(-10, 10))
    def test_global_phase_invariant(self, s, theta):
        t = QutritState(*(cmath.exp(1j * theta) * s.vector))
        assert fidelity(s, t) == pytest.approx(1, abs=1e-12)


class TestRandomQutrit:
    def test_deterministic(self):
        assert random_qutrit(42) == random_qutrit(42)
        assert random_qutrit(42) != random_qutrit(43)

    def test_special_constraint(self):
        for seed in range(20):
            s = random_qutrit(seed, Constraint.SPECIAL)
            assert abs(abs(s.c1) - abs(s.c3)) < 1e-15
            assert abs(wrap_phase(s.phases.delta) - math.pi) < 1e-12 or abs(s.phases.delta + math.pi) < 1e-12

    def test_noc2_constraint(self):
        s = random_qutrit(3, "noc2")
        assert s.c2 == 0 and s.c3.imag == 0

    @pytest.mark.parametrize("constraint", list(Constraint))
    def test_invariants(self, constraint):
        for seed in range(200):
            random_qutrit(seed, constraint).validate(canonical=True)

    def test_uniform_on_sphere(self):
        # |c1|^2 ~ Beta(1, 2): mean 1/3, variance 1/18
        w = np.array([abs(random_qutrit(s).c1) ** 2 for s in range(10_000)])
        sigma = math.sqrt(1 / 18 / len(w))
        assert abs(w.mean() - 1 / 3) < 3 * sigma


class TestAssemble:
    def test_basis_states(self):
        assert close(assemble(1, 0, 0, PhasePair.from_phases(0, 0)), QutritState(1, 0, 0))
        assert close(assemble(0, 1, 0, PhasePair.from_phases(1.0, -2.0)), QutritState(0, 1, 0))

    def test_direct_substitution(self):
        s = assemble(0.25, 0.5, 0.25, PhasePair.from_phases(math.pi / 2, -math.pi / 2))
        assert close(s, QutritState(0.5j, 1 / R2, -0.5j), tol=1e-15)

    def test_bad_sum(self):
        with pytest.raises(BadProbabilitySum):
            assemble(0.5, 0.5, 0.1, PhasePair.from_phases(0, 0))

    @given(qutrits())
    def test_reproduces_state(self, s):
        s = canonicalize(s)
        t = assemble(*s.magnitudes2, s.phases)
        assert fidelity(s, t) >= 1 - 1e-12


class TestPhases:
    @pytest.mark.parametrize(
        "x, expected",
        [(0.0, 0.0), (math.pi, math.pi), (-math.pi, math.pi), (3 * math.pi, math.pi), (4.0, 4.0 - 2 * math.pi)],
    )
    def test_wrap(self, x, expected):
        assert wrap_phase(x) == pytest.approx(expected, abs=1e-15)

    @given(st.floats(-100, 100))
    def test_wrap_range(self, x):
        w = wrap_phase(x)
        assert -math.pi < w <= math.pi
        assert math.cos(w) == pytest.approx(math.cos(x), abs=1e-9)

    def test_delta(self):
        p = PhasePair.from_phases(3.0, -3.0)
        assert p.delta == pytest.approx(6.0 - 2 * math.pi)


def test_json_round_trip():
    s = random_qutrit(9)
    assert QutritState.from_dict(s.to_dict()) == s


def test_non_finite_rejected():
    with pytest.raises(InputError):
        QutritState(float("nan"), 0, 0)
