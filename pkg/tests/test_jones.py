import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biqutrit import oracle
from biqutrit.core import QutritState
from biqutrit.exceptions import NonUnitary
from biqutrit.jones import (
    SQRT_I,
    analyzer,
    apply_single,
    induced_qutrit_map,
    is_unitary,
    jones,
    to_diagonal_basis,
)
from conftest import qutrits

R2 = math.sqrt(2)
angles = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)


class TestJones:
    def test_eighth_wave_horizontal(self):
        assert np.allclose(jones(0, math.pi / 4), [[1, 0], [0, SQRT_I]], atol=1e-15)

    @pytest.mark.parametrize("alpha", np.linspace(0, math.pi, 7))
    def test_half_wave(self, alpha):
        c, s = math.cos(2 * alpha), math.sin(2 * alpha)
        assert np.allclose(jones(alpha, math.pi), [[c, s], [s, -c]], atol=1e-15)

    def test_quarter_wave(self):
        a = 0.3
        c, s = math.cos(a), math.sin(a)
        expected = [[c * c + 1j * s * s, (1 - 1j) * s * c], [(1 - 1j) * s * c, 1j * c * c + s * s]]
        assert np.allclose(jones(a, math.pi / 2), expected, atol=1e-15)

    def test_zero_retardance(self):
        assert np.allclose(jones(1.234, 0), np.eye(2), atol=1e-15)

    def test_sqrt_i_branch(self):
        assert SQRT_I**2 == pytest.approx(1j, abs=1e-15)

    @given(angles, angles)
    def test_unitary(self, alpha, phi):
        j = jones(alpha, phi)
        assert is_unitary(j)
        assert abs(abs(np.linalg.det(j)) - 1) < 1e-12


class TestApplySingle:
    def test_vertical_picks_up_sqrt_i(self):
        assert np.allclose(apply_single(jones(0, math.pi / 4), [0, 1]), [0, SQRT_I])

    def test_eighth_wave_at_45(self):
        out = apply_single(jones(math.pi / 4, math.pi / 4), [1, 0])
        assert np.allclose(out, [(1 + SQRT_I) / 2, (1 - SQRT_I) / 2], atol=1e-15)

    def test_identity(self):
        v = np.array([0.6, 0.8j])
        assert np.allclose(apply_single(np.eye(2), v), v)


class TestInducedMap:
    def test_eighth_wave_horizontal_is_diagonal(self):
        t = induced_qutrit_map(jones(0, math.pi / 4))
        assert np.allclose(t, np.diag([1, SQRT_I, 1j]), atol=1e-15)

    def test_eighth_wave_at_45_columns(self):
        t = induced_qutrit_map(jones(math.pi / 4, math.pi / 4))
        k = (1 - 1j) / (2 * R2)
        expected = np.array(
            [
                [(1 + SQRT_I) ** 2 / 4, k, (1 - SQRT_I) ** 2 / 4],
                [k, (1 + 1j) / 2, k],
                [(1 - SQRT_I) ** 2 / 4, k, (1 + SQRT_I) ** 2 / 4],
            ]
        )
        assert np.allclose(t, expected, atol=1e-15)

    def test_identity(self):
        assert np.allclose(induced_qutrit_map(np.eye(2)), np.eye(3))

    def test_rejects_non_unitary(self):
        with pytest.raises(NonUnitary):
            induced_qutrit_map(np.array([[1, 0], [0, 0.5]]))

    @given(angles, angles, angles, angles)
    def test_homomorphism(self, a1, p1, a2, p2):
        j1, j2 = jones(a1, p1), jones(a2, p2)
        lhs = induced_qutrit_map(j1 @ j2)
        rhs = induced_qutrit_map(j1) @ induced_qutrit_map(j2)
        assert np.allclose(lhs, rhs, rtol=0, atol=1e-12)

    def test_matches_two_photon_transform(self):
        rng = np.random.default_rng(0)
        worst = 0.0
        for _ in range(1000):
            j = jones(*rng.uniform(-math.pi, math.pi, 2))
            x = rng.standard_normal(6)
            s = QutritState(complex(x[0], x[1]), complex(x[2], x[3]), complex(x[4], x[5]))
            via_map = induced_qutrit_map(j) @ s.vector
            via_oracle = oracle.extract(oracle.two_photon_transform(j, oracle.embed(s))).vector
            worst = max(worst, np.max(np.abs(via_map - via_oracle)))
        assert worst < 1e-12


class TestDiagonalBasis:
    @pytest.mark.parametrize(
        "c, b",
        [
            ((1, 0, 0), (0.5, -1 / R2, 0.5)),
            ((0, 1, 0), (1 / R2, 0, -1 / R2)),
            ((1 / R2, 0, -1 / R2), (0, -1, 0)),
        ],
    )
    def test_examples(self, c, b):
        assert np.allclose(to_diagonal_basis(c), b, atol=1e-15)

    @given(qutrits())
    def test_norm_preserved(self, s):
        assert np.linalg.norm(to_diagonal_basis(s.vector)) == pytest.approx(1, abs=1e-12)

    def test_is_rotation_by_45(self):
        t = induced_qutrit_map(analyzer(math.pi / 4))
        assert np.allclose(t, [[1 / 2, 1 / R2, 1 / 2], [-1 / R2, 0, 1 / R2], [1 / 2, -1 / R2, 1 / 2]])
        for c in np.eye(3):
            assert np.allclose(t @ c, to_diagonal_basis(c), atol=1e-15)

    @given(qutrits())
    def test_matches_creation_operator_transform(self, s):
        # a_H^+ = (a_45^+ - a_135^+)/sqrt2, a_V^+ = (a_45^+ + a_135^+)/sqrt2
        a = oracle.embed(s)
        h = np.array([1, -1]) / R2
        v = np.array([1, 1]) / R2
        basis_change = np.column_stack([h, v])
        a45 = basis_change @ a @ basis_change.T
        b = np.array([a45[0, 0], R2 * a45[0, 1], a45[1, 1]])
        assert np.allclose(to_diagonal_basis(s.vector), b, atol=1e-12)

    @given(qutrits())
    def test_twice_is_rotation_by_90(self, s):
        twice = to_diagonal_basis(to_diagonal_basis(s.vector))
        assert np.allclose(np.abs(twice), np.abs(s.vector[::-1]), atol=1e-12)
