# -*- coding: utf-8 -*-
"""Tests for unitary construction checks and their exact action."""

from fractions import Fraction

import pytest

from src.errors import DimensionMismatch, NonUnitary
from src.numeric.exact import ExactComplex, I, ONE, ZERO
from src.state.unitary import (
    Dense, Diagonal, Permutation, SingleTargetGate, controlled_not, gate, hadamard, pauli_x, pauli_y,
    pythagorean_rotation, random_circuit, random_rational_unitary, rational_phase, sqrt_x, unitarity_defect,
)


def dense_of_gate(g: SingleTargetGate, d: int):
    """Kronecker-style expansion of a controlled single-qubit gate."""
    bit = 1 << g.target
    mask = sum(1 << c for c in g.controls)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            active = (i & mask) == mask and (j & mask) == mask
            if not active:
                row.append(ONE if i == j else ZERO)
            elif (i & ~bit) == (j & ~bit):
                row.append(g.matrix[1 if i & bit else 0][1 if j & bit else 0])
            else:
                row.append(ZERO)
        rows.append(row)
    return rows


def matvec(matrix, vec):
    out = {}
    for i, row in enumerate(matrix):
        acc = ZERO
        for j, a in vec.items():
            acc = acc + row[j] * a
        if not acc.is_zero():
            out[i] = acc
    return out


class TestConstruction:
    def test_rational_gates_are_exactly_unitary(self):
        for m in (pauli_x(), pauli_y(), sqrt_x(), pythagorean_rotation(Fraction(2, 3))):
            assert unitarity_defect(m) == 0

    def test_non_unitary_rejected(self):
        with pytest.raises(NonUnitary):
            gate(((ONE, ONE), (ONE, -ONE)), 0)

    def test_hadamard_needs_tolerance(self):
        matrix, tol = hadamard(64)
        gate(matrix, 0, tolerance=tol)
        with pytest.raises(NonUnitary):
            gate(matrix, 0)

    def test_diagonal_requires_unit_phases(self):
        Diagonal((ONE, I, rational_phase(Fraction(1, 3))))
        with pytest.raises(NonUnitary):
            Diagonal((ONE, ExactComplex.of("1/2")))

    def test_permutation_must_be_bijection(self):
        with pytest.raises(NonUnitary):
            Permutation({0: 1, 1: 1})
        assert Permutation({0: 1, 1: 0, 2: 2}).mapping == {0: 1, 1: 0}

    def test_dimension_checks(self):
        with pytest.raises(DimensionMismatch):
            gate(pauli_x(), 3).check_dimension(4)
        with pytest.raises(DimensionMismatch):
            gate(pauli_x(), 0).check_dimension(6)
        with pytest.raises(DimensionMismatch):
            Diagonal((ONE, ONE)).check_dimension(3)
        with pytest.raises(DimensionMismatch):
            Permutation({0: 5, 5: 0}).check_dimension(4)


class TestExactAction:
    def test_controlled_not(self):
        cnot = controlled_not(0, 1)
        assert cnot.apply({1: ONE}, 4) == {3: ONE}
        assert cnot.apply({2: ONE}, 4) == {2: ONE}

    def test_cancellation_drops_zero_entries(self):
        sx = gate(sqrt_x(), 0)
        assert sx.apply(sx.apply({0: ONE}, 2), 2) == {1: ONE}

    def test_gates_match_dense_product(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 4))
            d = 1 << n
            vec = {int(j): rational_phase(Fraction(int(rng.integers(-3, 4)), 3)) for j in rng.choice(d, size=d, replace=False)}
            for g in random_circuit(n, 4, rng):
                assert g.apply(vec, d) == matvec(dense_of_gate(g, d), vec)

    def test_random_rational_unitary_matches_dense_product(self, rng):
        u = random_rational_unitary(4, rng, rotations=6)
        assert unitarity_defect(u.matrix) == 0
        vec = {0: ExactComplex.of("3/5"), 2: ExactComplex.of(0, "4/5")}
        assert u.apply(vec, 4) == matvec(u.matrix, vec)

    def test_permutation_relabels(self):
        assert Permutation({0: 2, 2: 0}).apply({0: ONE, 1: I}, 3) == {2: ONE, 1: I}

    def test_dense_cap(self):
        big = [[ONE if i == j else ZERO for j in range(65)] for i in range(65)]
        with pytest.raises(ValueError):
            Dense(big)
