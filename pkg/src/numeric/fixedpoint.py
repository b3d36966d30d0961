# -*- coding: utf-8 -*-
"""
The mu-bit amplitude grid.

An amplitude is stored as two signed integers counting multiples of
delta = 2^(-mu/2). All linear algebra happens on ExactComplex values; this
module is only consulted at commit points.
"""

from dataclasses import dataclass
from fractions import Fraction

from src.config import MAX_MU
from src.errors import RangeExceeded
from src.numeric.exact import ExactComplex

# Per-component headroom; unnormalized intermediates may reach |2|.
HEADROOM = Fraction(2)


@dataclass(frozen=True)
class Resolution:
    """Fine-graining parameter mu, in bits per amplitude (mu/2 per component)."""

    mu: int

    def __post_init__(self):
        if not isinstance(self.mu, int) or isinstance(self.mu, bool):
            raise ValueError(f"mu must be an integer, got {self.mu!r}")
        if self.mu < 2 or self.mu % 2:
            raise ValueError(f"mu must be even and >= 2, got {self.mu}")
        if self.mu > MAX_MU:
            raise ValueError(f"mu={self.mu} exceeds the engine limit {MAX_MU}")

    @property
    def half_bits(self) -> int:
        return self.mu // 2

    @property
    def scale(self) -> int:
        """Grid points per unit amplitude, 2^(mu/2)."""
        return 1 << self.half_bits

    @property
    def delta(self) -> Fraction:
        return Fraction(1, self.scale)

    @property
    def threshold(self) -> Fraction:
        return self.delta

    @property
    def threshold_sq(self) -> Fraction:
        return Fraction(1, 1 << self.mu)

    @property
    def coherence_bound(self) -> int:
        """Largest uniform superposition the grid can carry, 2^mu."""
        return 1 << self.mu

    @property
    def working_bits(self) -> int:
        """Fractional bits for irrational intermediates (square roots, trig)."""
        return 2 * self.mu + 32


@dataclass(frozen=True)
class FixedComplex:
    """(re_units + i*im_units) * 2^(-mu/2)."""

    re_units: int
    im_units: int
    resolution: Resolution

    def __post_init__(self):
        limit = 2 * self.resolution.scale
        if abs(self.re_units) > limit or abs(self.im_units) > limit:
            raise RangeExceeded(
                f"grid value ({self.re_units}, {self.im_units}) outside headroom at mu={self.resolution.mu}"
            )

    def to_exact(self) -> ExactComplex:
        d = self.resolution.delta
        return ExactComplex(self.re_units * d, self.im_units * d)

    def units_sq(self) -> int:
        """|value|^2 in units of 2^-mu."""
        return self.re_units * self.re_units + self.im_units * self.im_units

    def is_zero(self) -> bool:
        return self.re_units == 0 and self.im_units == 0


def _round_component(x: Fraction, r: Resolution, label: str) -> int:
    if abs(x) > HEADROOM:
        raise RangeExceeded(f"{label} component {x} exceeds headroom {HEADROOM}")
    # Fraction.__round__ rounds exact ties to even
    return round(x * r.scale)


def quantize(c: ExactComplex, r: Resolution) -> FixedComplex:
    """Round each component to the nearest grid multiple (ties to even)."""
    return FixedComplex(_round_component(c.re, r, "real"), _round_component(c.im, r, "imaginary"), r)


def below_resolution(c: ExactComplex, r: Resolution) -> bool:
    """True iff |c| < 2^(-mu/2); magnitude equal to the threshold survives."""
    return c.magnitude_sq() < r.threshold_sq
