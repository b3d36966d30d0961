# -*- coding: utf-8 -*-
"""
Estimating a dyadic omega by rotation and repeated measurement.

U_C = exp(-i omega sigma_x) turns |up> into cos(omega)|up> - i sin(omega)|down>.
After quantization to the mu-bit grid the up probability is some grid value q
close to cos^2(omega); measuring many copies estimates q, never cos^2(omega)
itself, so the error in arccos(sqrt(q)) is a floor no shot count removes.
"""

import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

import mpmath
import numpy as np

from src.config import DEFAULT_MU
from src.numeric.exact import ExactComplex
from src.numeric.fixedpoint import Resolution
from src.state.rng import derive_seed, stream
from src.state.statevec import apply_unitary, basis_state
from src.state.unitary import SingleTargetGate

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("omega", "mu", "shots", "estimate", "stderr", "floor")
REDUCTION_STEPS = 8
GUARD_BITS = 32


def cos_sin_fraction(x: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    """cos x and sin x to within 2^-bits, as dyadic rationals.

    Taylor series on x / 2^8 in integer fixed point, then eight double-angle steps.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(1), Fraction(0)
    w = bits + GUARD_BITS + REDUCTION_STEPS
    one = 1 << w
    y = round(x * one) >> REDUCTION_STEPS

    # sin y = y - y^3/3! + ..., cos y = 1 - y^2/2! + ...
    s, c = 0, 0
    term, n = y, 1
    while term:
        s += term
        term = -((term * y >> w) * y >> w) // ((n + 1) * (n + 2))
        n += 2
    term, n = one, 0
    while term:
        c += term
        term = -((term * y >> w) * y >> w) // ((n + 1) * (n + 2))
        n += 2

    for _ in range(REDUCTION_STEPS):
        s, c = (2 * s * c) >> w, (c * c - s * s) >> w

    shift = w - bits
    return Fraction(round(Fraction(c, 1 << shift)), 1 << bits), Fraction(round(Fraction(s, 1 << shift)), 1 << bits)


def build_U_C(omega: Fraction, precision_bits: int = 2 * (2 * DEFAULT_MU + 32)) -> SingleTargetGate:
    """exp(-i omega sigma_x) on qubit 0, entries accurate to 2^-precision_bits."""
    omega = Fraction(omega)
    if not 0 <= omega < 1:
        raise ValueError(f"omega must lie in [0, 1), got {omega}")
    c, s = cos_sin_fraction(omega, precision_bits)
    diag, off = ExactComplex(c), ExactComplex(0, -s)
    tolerance = Fraction(1, 1 << (precision_bits - 3))
    return SingleTargetGate(((diag, off), (off, diag)), 0, (), tolerance)


def quantization_floor(omega: Fraction, grid_probability: Fraction, mu: int) -> float:
    """|arccos(sqrt(q)) - omega| evaluated at 4*mu bits."""
    with mpmath.workprec(max(4 * mu, 64)):
        q = mpmath.mpf(grid_probability.numerator) / grid_probability.denominator
        w = mpmath.mpf(omega.numerator) / omega.denominator
        return float(abs(mpmath.acos(mpmath.sqrt(q)) - w))


@dataclass
class RotationResult:
    omega: Fraction
    mu: int
    shots: int
    up_count: int
    estimate: float
    standard_error: float
    grid_probability: Fraction
    quantization_floor: float

    @property
    def error(self) -> float:
        return abs(self.estimate - float(self.omega))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "omega": str(self.omega),
            "mu": self.mu,
            "shots": self.shots,
            "up_count": self.up_count,
            "estimate": self.estimate,
            "standard_error": self.standard_error,
            "grid_probability": str(self.grid_probability),
            "quantization_floor": self.quantization_floor,
        }

    def csv_row(self) -> List[Any]:
        return [str(self.omega), self.mu, self.shots, repr(self.estimate),
                repr(self.standard_error), repr(self.quantization_floor)]


def rotation_experiment(omega: Fraction, mu: int, shots: int, seed: int) -> RotationResult:
    """Rotate |up> by U_C at resolution mu and estimate omega from ``shots`` sigma_z outcomes."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    omega = Fraction(omega)
    r = Resolution(mu)
    u = build_U_C(omega, 2 * r.working_bits)
    state = apply_unitary(basis_state(0, 2, r), u)
    q = state.probabilities().get(0, Fraction(0))

    up = int(stream(seed).binomial(shots, float(q)))
    estimate = float(np.arccos(np.sqrt(up / shots)))
    # delta method: d arccos(sqrt p)/dp = -1 / (2 sqrt(p (1 - p)))
    # a grid probability of 0 or 1 makes every shot agree
    stderr = 1.0 / (2.0 * np.sqrt(shots)) if 0 < q < 1 else 0.0

    result = RotationResult(omega, mu, shots, up, estimate, stderr, q, quantization_floor(omega, q, mu))
    logger.debug("Rotation omega=%s mu=%d shots=%d: estimate %.6g (floor %.3g)",
                 omega, mu, shots, estimate, result.quantization_floor)
    return result


def rotation_ladder(omega: Fraction, mu: int, shots_list: Sequence[int], seed: int) -> List[RotationResult]:
    """One rotation experiment per shot count, each on its own stream."""
    results = [rotation_experiment(omega, mu, shots, derive_seed(seed, k)) for k, shots in enumerate(shots_list)]
    logger.info("Rotation ladder omega=%s mu=%d: %d rungs, floor %.3g",
                omega, mu, len(results), results[0].quantization_floor if results else float("nan"))
    return results


def write_ladder_csv(results: Sequence[RotationResult], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for r in results:
            writer.writerow(r.csv_row())
    return path
