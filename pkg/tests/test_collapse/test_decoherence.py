# -*- coding: utf-8 -*-
"""Tests for the decoherence experiment."""

import csv
from fractions import Fraction

import pytest

from src.collapse.decoherence import (
    CSV_COLUMNS, decoherence_experiment, initial_state, reduced_offdiagonal,
)


class TestReducedOffdiagonal:
    def test_plus_state_at_mu4(self):
        s = initial_state(3, 4)
        assert reduced_offdiagonal(s).re == Fraction(1, 2)

    def test_zero_state(self):
        assert reduced_offdiagonal(initial_state(3, 4, "zero")).is_zero()


class TestDecoherenceExperiment:
    def test_hand_computed_decay_at_mu4(self):
        result = decoherence_experiment(cycles=4, trials=3, mu=4, seed=1)
        means = [row.mean_offdiag for row in result.rows]
        assert means[0] == pytest.approx(0.5)
        assert means[1] == pytest.approx(6 / 17)
        assert means[2] == pytest.approx(3 / 19)
        assert means[3] == 0.0

    def test_no_coherence_to_lose(self):
        result = decoherence_experiment(cycles=6, trials=5, mu=4, initial="zero")
        assert all(row.mean_offdiag == 0 for row in result.rows)

    def test_zero_coupling_keeps_coherence(self):
        result = decoherence_experiment(cycles=6, trials=5, mu=4, coupling=Fraction(0))
        assert all(row.mean_offdiag == pytest.approx(0.5) for row in result.rows)

    def test_exact_oracle_decays_geometrically(self):
        result = decoherence_experiment(cycles=6, trials=4, exact=True, coupling=Fraction(1, 2))
        for row in result.rows:
            assert row.mean_offdiag == pytest.approx(0.5 * (3 / 5) ** row.cycle, rel=1e-9)
            assert row.events == 0

    def test_default_configuration(self):
        result = decoherence_experiment(cycles=20, trials=2000, mu=4, seed=0)
        rows = result.rows
        assert rows[-1].mean_offdiag < rows[0].mean_offdiag / 2
        for prev, nxt in zip(rows, rows[1:]):
            assert nxt.mean_offdiag <= prev.ci_high + 1e-12
        assert rows[-1].ensemble_offdiag < 0.25

    def test_replay(self):
        a = decoherence_experiment(cycles=12, trials=50, mu=4, seed=9).to_dict()
        b = decoherence_experiment(cycles=12, trials=50, mu=4, seed=9).to_dict()
        assert a == b

    def test_worker_count_does_not_change_result(self):
        serial = decoherence_experiment(cycles=10, trials=40, mu=4, seed=3, workers=1).to_dict()
        pooled = decoherence_experiment(cycles=10, trials=40, mu=4, seed=3, workers=2).to_dict()
        assert serial == pooled

    def test_csv_columns(self, tmp_path):
        result = decoherence_experiment(cycles=3, trials=4, mu=4)
        path = result.write_csv(tmp_path / "curve.csv")
        with path.open() as f:
            rows = list(csv.reader(f))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert len(rows) == 5

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            decoherence_experiment(cycles=0, trials=1)
