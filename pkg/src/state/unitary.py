# -*- coding: utf-8 -*-
"""Unitary evolutions over exact amplitudes, plus a library of rational gates."""

from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from src.config import MAX_DENSE_DIM
from src.errors import DimensionMismatch, NonUnitary
from src.numeric.exact import ExactComplex, ONE, ZERO, I, sqrt_fraction

Matrix = Tuple[Tuple[ExactComplex, ...], ...]
Amplitudes = Dict[int, ExactComplex]


def _as_matrix(rows: Sequence[Sequence[ExactComplex]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def unitarity_defect(matrix: Matrix) -> Fraction:
    """max over entries of |U^dagger U - I|, measured per component."""
    d = len(matrix)
    worst = Fraction(0)
    for i in range(d):
        for j in range(d):
            acc = ZERO
            for k in range(d):
                acc = acc + matrix[k][i].conj() * matrix[k][j]
            if i == j:
                acc = acc - ONE
            worst = max(worst, abs(acc.re), abs(acc.im))
    return worst


def _check_unitary(matrix: Matrix, tolerance: Fraction) -> None:
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise NonUnitary(f"matrix is not square ({d} rows)")
    defect = unitarity_defect(matrix)
    if defect > tolerance:
        raise NonUnitary(f"U^dagger U deviates from I by {defect} (tolerance {tolerance})")


class UnitarySpec(ABC):
    """A unitary acting on sparse exact amplitudes."""

    @abstractmethod
    def check_dimension(self, dimension: int) -> None:
        """Raise DimensionMismatch if the unitary cannot act on this space."""
        ...

    @abstractmethod
    def apply(self, amplitudes: Mapping[int, ExactComplex], dimension: int) -> Amplitudes:
        """Return U·s exactly; entries that cancel to zero are omitted."""
        ...


@dataclass(frozen=True)
class Diagonal(UnitarySpec):
    phases: Tuple[ExactComplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "phases", tuple(self.phases))
        for j, p in enumerate(self.phases):
            if p.magnitude_sq() != 1:
                raise NonUnitary(f"phase {p} at index {j} is not unit-modulus")

    def check_dimension(self, dimension: int) -> None:
        if len(self.phases) != dimension:
            raise DimensionMismatch(f"diagonal of length {len(self.phases)} on dimension {dimension}")

    def apply(self, amplitudes, dimension):
        return {j: self.phases[j] * a for j, a in amplitudes.items()}


@dataclass(frozen=True)
class SingleTargetGate(UnitarySpec):
    """2x2 gate on the qubit at ``target``; applied only where every ``controls`` bit is 1."""

    matrix: Matrix
    target: int
    controls: Tuple[int, ...] = ()
    tolerance: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "matrix", _as_matrix(self.matrix))
        object.__setattr__(self, "controls", tuple(self.controls))
        if len(self.matrix) != 2:
            raise NonUnitary("single-target gate must be 2x2")
        if self.target < 0 or self.target in self.controls:
            raise ValueError(f"invalid target {self.target} for controls {self.controls}")
        _check_unitary(self.matrix, self.tolerance)

    def check_dimension(self, dimension: int) -> None:
        if dimension & (dimension - 1):
            raise DimensionMismatch(f"qubit gate needs a power-of-two dimension, got {dimension}")
        top = max((self.target,) + self.controls)
        if (1 << top) >= dimension:
            raise DimensionMismatch(f"site {top} out of range for dimension {dimension}")

    def apply(self, amplitudes, dimension):
        bit = 1 << self.target
        control_mask = 0
        for c in self.controls:
            control_mask |= 1 << c

        out: Amplitudes = {}
        pairs: Dict[int, List[ExactComplex]] = defaultdict(lambda: [ZERO, ZERO])
        for j, a in amplitudes.items():
            if j & control_mask != control_mask:
                out[j] = a
                continue
            pairs[j & ~bit][1 if j & bit else 0] = a

        (u00, u01), (u10, u11) = self.matrix
        for base, (a0, a1) in pairs.items():
            b0 = u00 * a0 + u01 * a1
            b1 = u10 * a0 + u11 * a1
            if not b0.is_zero():
                out[base] = b0
            if not b1.is_zero():
                out[base | bit] = b1
        return out


@dataclass(frozen=True)
class Permutation(UnitarySpec):
    """Basis relabeling. Indices absent from ``mapping`` stay in place."""

    mapping: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        moved = {int(k): int(v) for k, v in self.mapping.items() if k != v}
        if set(moved) != set(moved.values()):
            raise NonUnitary("permutation mapping is not a bijection on its moved indices")
        object.__setattr__(self, "mapping", moved)

    def check_dimension(self, dimension: int) -> None:
        if self.mapping and (min(self.mapping) < 0 or max(self.mapping) >= dimension):
            raise DimensionMismatch(f"permutation moves indices outside [0, {dimension})")

    def apply(self, amplitudes, dimension):
        return {self.mapping.get(j, j): a for j, a in amplitudes.items()}


@dataclass(frozen=True)
class Dense(UnitarySpec):
    matrix: Matrix
    tolerance: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "matrix", _as_matrix(self.matrix))
        if len(self.matrix) > MAX_DENSE_DIM:
            raise ValueError(f"dense unitaries are capped at d={MAX_DENSE_DIM}, got {len(self.matrix)}")
        _check_unitary(self.matrix, self.tolerance)

    def check_dimension(self, dimension: int) -> None:
        if len(self.matrix) != dimension:
            raise DimensionMismatch(f"dense {len(self.matrix)}x{len(self.matrix)} on dimension {dimension}")

    def apply(self, amplitudes, dimension):
        out: Amplitudes = {}
        for i, row in enumerate(self.matrix):
            acc = ZERO
            for j, a in amplitudes.items():
                acc = acc + row[j] * a
            if not acc.is_zero():
                out[i] = acc
        return out


# ── Gate library ──

HALF = Fraction(1, 2)


def identity() -> Permutation:
    return Permutation({})


def pauli_x() -> Matrix:
    return ((ZERO, ONE), (ONE, ZERO))


def pauli_y() -> Matrix:
    return ((ZERO, -I), (I, ZERO))


def pauli_z() -> Matrix:
    return ((ONE, ZERO), (ZERO, -ONE))


def sqrt_x() -> Matrix:
    """((1+i)/2, (1-i)/2; (1-i)/2, (1+i)/2): equal-weight splitting with dyadic entries."""
    p = ExactComplex(HALF, HALF)
    m = ExactComplex(HALF, -HALF)
    return ((p, m), (m, p))


def pythagorean_rotation(t: Fraction) -> Matrix:
    """Real rotation with cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2)."""
    t = Fraction(t)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    return ((ExactComplex(c), ExactComplex(-s)), (ExactComplex(s), ExactComplex(c)))


def rational_phase(t: Fraction) -> ExactComplex:
    """Unit-modulus rational ((1-t^2) + 2ti)/(1+t^2)."""
    t = Fraction(t)
    return ExactComplex((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def hadamard(precision_bits: int = 128) -> Tuple[Matrix, Fraction]:
    """Rational approximation of H and the unitarity tolerance it needs."""
    h = ExactComplex(sqrt_fraction(HALF, precision_bits))
    tolerance = Fraction(1, 1 << (precision_bits - 2))
    return ((h, h), (h, -h)), tolerance


def gate(matrix: Matrix, target: int, controls: Sequence[int] = (), tolerance: Fraction = Fraction(0)) -> SingleTargetGate:
    return SingleTargetGate(matrix, target, tuple(controls), tolerance)


def controlled_not(control: int, target: int) -> SingleTargetGate:
    return SingleTargetGate(pauli_x(), target, (control,))


def controlled_rotation(control: int, target: int, t: Fraction) -> SingleTargetGate:
    return SingleTargetGate(pythagorean_rotation(t), target, (control,))


def cyclic_shift(n_qubits: int) -> Permutation:
    """Rotate qubit labels by one: qubit k moves to k+1, the top qubit wraps to 0."""
    top = n_qubits - 1
    return Permutation({j: ((j << 1) & ((1 << n_qubits) - 1)) | (j >> top) for j in range(1 << n_qubits)})


def random_rational_unitary(d: int, rng: np.random.Generator, rotations: int = 0) -> Dense:
    """Exactly unitary d x d matrix: Pythagorean Givens rotations and rational phases."""
    if d < 1:
        raise ValueError("dimension must be positive")
    rows = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]

    for _ in range(rotations or d * d):
        if d < 2:
            break
        p, q = (int(v) for v in rng.choice(d, size=2, replace=False))
        t = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 5)))
        (c, ms), (s, _) = pythagorean_rotation(t)
        for k in range(d):
            a, b = rows[p][k], rows[q][k]
            rows[p][k] = c * a + ms * b
            rows[q][k] = s * a + c * b

    for i in range(d):
        phase = rational_phase(Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4))))
        rows[i] = [phase * x for x in rows[i]]
    return Dense(rows)


def random_circuit(n_qubits: int, depth: int, rng: np.random.Generator) -> List[UnitarySpec]:
    """Random layer list drawn from the rational gate set (sqrt_x, rotations, CNOT)."""
    circuit: List[UnitarySpec] = []
    for _ in range(depth):
        kind = int(rng.integers(0, 3))
        target = int(rng.integers(0, n_qubits))
        if kind == 0:
            circuit.append(gate(sqrt_x(), target))
        elif kind == 1:
            t = Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 5)))
            circuit.append(gate(pythagorean_rotation(t), target))
        elif n_qubits > 1:
            control = int(rng.choice([q for q in range(n_qubits) if q != target]))
            circuit.append(controlled_not(control, target))
        else:
            circuit.append(gate(pauli_x(), target))
    return circuit


__all__ = [
    "UnitarySpec", "Diagonal", "SingleTargetGate", "Permutation", "Dense",
    "identity", "pauli_x", "pauli_y", "pauli_z", "sqrt_x", "pythagorean_rotation", "rational_phase",
    "hadamard", "gate", "controlled_not", "controlled_rotation", "cyclic_shift", "random_rational_unitary", "random_circuit",
    "unitarity_defect",
]
