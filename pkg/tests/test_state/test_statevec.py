# -*- coding: utf-8 -*-
"""Tests for state preparation, the resolution pass and Born sampling."""

from collections import Counter
from fractions import Fraction

import pytest
from scipy.stats import chisquare

from src.errors import DimensionMismatch, ResolutionExceeded, TotalExtinction
from src.numeric.exact import ExactComplex, ONE, ZERO, inv_sqrt_fraction, sqrt_fraction
from src.numeric.fixedpoint import FixedComplex, Resolution, quantize
from src.state.rng import stream
from src.state.statevec import (
    DiagonalObservable, PendingState, StateVector, apply_unitary, apply_unitary_exact, basis_state, born_sample,
    from_amplitudes, inner_product, measure_observable, resolution_pass, sample_counts, uniform_superposition,
)
from src.state.unitary import Permutation, controlled_not, gate, hadamard, random_circuit, random_rational_unitary


def norm_tolerance(state: StateVector) -> Fraction:
    return 4 * state.support * state.resolution.delta


class TestUniformSuperposition:
    def test_four_states(self, mu8):
        s = uniform_superposition(4, mu8)
        assert s.support == 4
        assert all(a == FixedComplex(8, 0, mu8) for a in s.amplitudes.values())

    def test_exceeds_resolution(self, mu8):
        with pytest.raises(ResolutionExceeded):
            uniform_superposition(512, mu8)

    def test_threshold_amplitude_survives(self, mu8):
        s = uniform_superposition(256, mu8)
        assert s.support == 256
        assert set(s.amplitudes.values()) == {FixedComplex(1, 0, mu8)}

    @pytest.mark.parametrize("mu", [4, 8, 16])
    def test_bound_is_two_to_the_mu(self, mu):
        r = Resolution(mu)
        assert uniform_superposition(1 << mu, r).support == 1 << mu
        with pytest.raises(ResolutionExceeded):
            uniform_superposition((1 << mu) + 1, r)

    def test_exact_mode(self):
        s = uniform_superposition(9, None)
        assert s.norm_sq() == 1
        with pytest.raises(ValueError):
            uniform_superposition(3, None)

    def test_embedded_in_larger_space(self, mu8):
        s = uniform_superposition(3, mu8, dimension=10)
        assert s.dimension == 10 and s.support == 3
        assert abs(s.norm_sq() - 1) <= norm_tolerance(s)


class TestStateVector:
    def test_rejects_zero_amplitude(self, mu4):
        with pytest.raises(ValueError):
            StateVector(2, {0: FixedComplex(0, 0, mu4)}, mu4)

    def test_rejects_out_of_range_index(self, mu4):
        with pytest.raises(DimensionMismatch):
            basis_state(4, 4, mu4)

    def test_probabilities_are_exact(self, mu8):
        s = from_amplitudes({0: ExactComplex.of("1/2"), 1: ExactComplex.of(0, "1/2")}, 2, mu8)
        assert s.probabilities() == {0: Fraction(1, 2), 1: Fraction(1, 2)}

    def test_inner_product_orthogonality(self, mu8):
        assert inner_product(basis_state(0, 4, mu8), basis_state(3, 4, mu8)).is_zero()
        s = uniform_superposition(4, mu8)
        assert inner_product(s, s) == ExactComplex(Fraction(1))


class TestResolutionPass:
    def test_small_amplitude_is_zeroed(self, mu8):
        big = ExactComplex(sqrt_fraction(Fraction(9975, 10000), 96))
        pending = PendingState(2, {0: big, 1: ExactComplex.of("1/20")}, mu8)
        state, lost = resolution_pass(pending, mu8)
        assert state.amplitudes == {0: FixedComplex(16, 0, mu8)}
        assert lost == pytest.approx(0.0025, abs=1e-12)

    def test_uniform_three_all_survive(self, mu8):
        amp = ExactComplex(inv_sqrt_fraction(Fraction(3), 96))
        state, lost = resolution_pass(PendingState(3, {j: amp for j in range(3)}, mu8), mu8)
        assert state.support == 3
        assert lost == 0

    def test_total_extinction(self, mu8):
        pending = PendingState(2, {0: ExactComplex.of("1/20"), 1: ExactComplex.of("1/25")}, mu8)
        with pytest.raises(TotalExtinction):
            resolution_pass(pending, mu8)

    def test_survivors_match_exact_oracle(self, mu6, rng):
        """Random <=3-qubit circuits: support after one commit = {j : |amp_j| >= 1/8}."""
        for _ in range(100):
            n = int(rng.integers(1, 4))
            d = 1 << n
            if rng.integers(0, 2):
                amps = random_rational_unitary(d, rng, rotations=2 * d).apply({0: ONE}, d)
            else:
                amps = {0: ONE}
                for g in random_circuit(n, 6, rng):
                    amps = g.apply(amps, d)
            expected = {j for j, a in amps.items() if a.magnitude_sq() >= Fraction(1, 64)}
            state, lost = resolution_pass(PendingState(d, amps, mu6), mu6)
            assert set(state.amplitudes) == expected
            assert abs(state.norm_sq() - 1) <= norm_tolerance(state)
            assert 0 <= lost < 1

    def test_lost_weight_never_increases_with_mu(self, rng):
        for _ in range(20):
            amps = random_rational_unitary(8, rng, rotations=16).apply({0: ONE}, 8)
            losses = [resolution_pass(PendingState(8, amps, Resolution(mu)), Resolution(mu))[1] for mu in (4, 6, 8, 10, 16)]
            assert all(a >= b for a, b in zip(losses, losses[1:]))


class TestApplyUnitary:
    def test_identity_permutation(self, mu8):
        s = uniform_superposition(4, mu8)
        assert apply_unitary(s, Permutation({})) == s

    def test_hadamard_on_zero(self):
        r = Resolution(64)
        matrix, tol = hadamard(r.working_bits)
        s = apply_unitary(basis_state(0, 2, r), gate(matrix, 0, tolerance=tol))
        expected = quantize(ExactComplex(sqrt_fraction(Fraction(1, 2), 200)), r)
        assert s.amplitudes == {0: expected, 1: expected}

    def test_dimension_mismatch(self, mu8):
        with pytest.raises(DimensionMismatch):
            apply_unitary(basis_state(0, 2, mu8), controlled_not(0, 1))

    def test_dense_vs_exact_oracle(self, mu6, rng):
        u = random_rational_unitary(4, rng, rotations=8)
        exact = apply_unitary(basis_state(0, 4, None), u)
        committed = apply_unitary(basis_state(0, 4, mu6), u)
        expected = {j for j, a in exact.exact_amplitudes().items() if a.magnitude_sq() >= Fraction(1, 64)}
        assert set(committed.amplitudes) == expected

    def test_exact_mode_preserves_norm(self, rng):
        s = basis_state(0, 8, None)
        for g in random_circuit(3, 20, rng):
            s = apply_unitary(s, g)
            assert s.norm_sq() == 1

    @pytest.mark.parametrize("mu", [4, 8, 16, 32, 64])
    def test_norm_bound_after_every_commit(self, mu, rng):
        r = Resolution(mu)
        for _ in range(10):
            s = basis_state(0, 8, r)
            for g in random_circuit(3, 8, rng):
                s = apply_unitary(s, g)
                assert abs(s.norm_sq() - 1) <= norm_tolerance(s)

    def test_pending_state_is_uncommitted(self, mu4):
        pending = apply_unitary_exact(basis_state(0, 2, mu4), gate(((ONE, ZERO), (ZERO, ONE)), 0))
        assert pending.amplitudes == {0: ONE}


class TestBornSampling:
    def test_single_support_is_deterministic(self, mu8):
        s = basis_state(5, 8, mu8)
        assert {born_sample(s, seed) for seed in range(50)} == {5}

    def test_replayable(self, mu8):
        s = uniform_superposition(16, mu8)
        assert [born_sample(s, seed) for seed in range(100)] == [born_sample(s, seed) for seed in range(100)]

    def test_uniform_frequencies(self, mu8):
        s = uniform_superposition(4, mu8)
        gen = stream(7)
        counts = Counter(born_sample(s, gen) for _ in range(100_000))
        for j in range(4):
            assert counts[j] / 100_000 == pytest.approx(0.25, abs=0.01)

    def test_chi_square_quarter_three_quarters(self, mu8):
        s = from_amplitudes({0: ExactComplex.of("1/2"), 1: ExactComplex(sqrt_fraction(Fraction(3, 4), 96))}, 2, mu8)
        probs = s.probabilities()
        gen = stream(11)
        counts = Counter(born_sample(s, gen) for _ in range(100_000))
        observed = [counts[0], counts[1]]
        expected = [float(probs[0]) * 100_000, float(probs[1]) * 100_000]
        assert chisquare(observed, expected).pvalue > 0.001

    def test_sample_counts_total(self, mu8):
        s = uniform_superposition(8, mu8)
        counts = sample_counts(s, 10_000, 3)
        assert sum(counts.values()) == 10_000
        assert set(counts) <= set(range(8))


class TestMeasureObservable:
    def test_root_eigenvalue(self, mu8):
        obs = DiagonalObservable({j: Fraction((j - 3) ** 2) for j in range(4)})
        value, post = measure_observable(basis_state(3, 4, mu8), obs, 1)
        assert value == 0
        assert post == basis_state(3, 4, mu8)

    def test_square_eigenvalues(self, mu8):
        obs = DiagonalObservable({j: Fraction(j * j) for j in range(4)})
        s = uniform_superposition(4, mu8)
        gen = stream(5)
        seen = Counter(measure_observable(s, obs, gen)[0] for _ in range(20_000))
        assert set(seen) == {0, 1, 4, 9}
        for v in seen.values():
            assert v / 20_000 == pytest.approx(0.25, abs=0.02)

    def test_undefined_index(self, mu8):
        with pytest.raises(DimensionMismatch):
            measure_observable(basis_state(2, 4, mu8), DiagonalObservable({0: Fraction(1)}), 0)
