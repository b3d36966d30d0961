# -*- coding: utf-8 -*-
"""Tests for U_C and the rotation estimate of omega."""

import csv
from fractions import Fraction

import mpmath
import pytest

from src.chaitin.rotation import (
    CSV_COLUMNS, build_U_C, cos_sin_fraction, rotation_experiment, rotation_ladder, write_ladder_csv,
)
from src.numeric.exact import ExactComplex
from src.state.statevec import apply_unitary_exact, basis_state
from src.state.unitary import unitarity_defect


class TestTrig:
    @pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1, 3), Fraction(99, 100), Fraction(1, 1 << 20)])
    def test_matches_mpmath(self, x):
        c, s = cos_sin_fraction(x, 96)
        with mpmath.workprec(200):
            xm = mpmath.mpf(x.numerator) / x.denominator
            assert abs(mpmath.mpf(c.numerator) / c.denominator - mpmath.cos(xm)) < mpmath.mpf(2) ** -94
            assert abs(mpmath.mpf(s.numerator) / s.denominator - mpmath.sin(xm)) < mpmath.mpf(2) ** -94

    def test_zero(self):
        assert cos_sin_fraction(Fraction(0), 64) == (1, 0)


class TestBuildUC:
    def test_zero_is_identity(self):
        u = build_U_C(Fraction(0))
        assert u.matrix[0][0] == ExactComplex(1) and u.matrix[0][1].is_zero()

    def test_up_probability_is_cos_squared(self):
        omega = Fraction(1, 2)
        pending = apply_unitary_exact(basis_state(0, 2, None), build_U_C(omega, 128))
        p_up = pending.amplitudes[0].magnitude_sq()
        with mpmath.workprec(200):
            assert abs(mpmath.mpf(p_up.numerator) / p_up.denominator - mpmath.cos(0.5) ** 2) < 1e-30

    def test_unitary_within_tolerance(self):
        u = build_U_C(Fraction(1, 2), 2 * (2 * 64 + 32))
        assert unitarity_defect(u.matrix) <= u.tolerance

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            build_U_C(Fraction(1))


class TestRotationExperiment:
    def test_zero_rotation(self):
        result = rotation_experiment(Fraction(0), 8, 1000, seed=1)
        assert result.up_count == 1000
        assert result.estimate == 0.0
        assert result.quantization_floor == 0.0
        assert result.standard_error == 0.0

    def test_fine_grid_is_accurate(self):
        result = rotation_experiment(Fraction(1, 2), 64, 10 ** 6, seed=2)
        assert result.quantization_floor < 1e-8
        assert abs(result.estimate - 0.5) < 3 * result.standard_error

    def test_coarse_grid_floor(self):
        result = rotation_experiment(Fraction(1, 2), 8, 10 ** 8, seed=3)
        assert result.quantization_floor > 100 * result.standard_error
        assert result.error > result.quantization_floor - 5 * result.standard_error
        assert result.quantization_floor == pytest.approx(0.019, abs=0.002)

    def test_replay(self):
        a = rotation_experiment(Fraction(3, 8), 16, 5000, seed=4).to_dict()
        assert a == rotation_experiment(Fraction(3, 8), 16, 5000, seed=4).to_dict()

    def test_rejects_zero_shots(self):
        with pytest.raises(ValueError):
            rotation_experiment(Fraction(1, 2), 8, 0, seed=0)


class TestRotationLadder:
    def test_converges_to_floor_not_to_omega(self):
        shots = [1000 * 4 ** k for k in range(7)]
        rungs = rotation_ladder(Fraction(1, 2), 8, shots, seed=5)
        floor = rungs[0].quantization_floor
        for r in rungs:
            assert abs(r.error - floor) < 5 * r.standard_error
        assert rungs[-1].error > 0.9 * floor

    def test_csv(self, tmp_path):
        rungs = rotation_ladder(Fraction(1, 2), 8, [100, 200], seed=0)
        path = write_ladder_csv(rungs, tmp_path / "ladder.csv")
        with path.open() as f:
            rows = list(csv.reader(f))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert [row[2] for row in rows[1:]] == ["100", "200"]
