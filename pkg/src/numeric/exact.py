# -*- coding: utf-8 -*-
"""Exact complex arithmetic over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Union[int, Fraction]


def as_fraction(value: Union[int, str, Fraction, float]) -> Fraction:
    """Exact rational from an int, a decimal or ratio string, or a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact values; pass a Fraction or a decimal string")
    return Fraction(value)


@dataclass(frozen=True)
class ExactComplex:
    """re + i*im with rational parts. No operation ever rounds."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def of(cls, re: Union[int, str, Fraction] = 0, im: Union[int, str, Fraction] = 0) -> "ExactComplex":
        return cls(as_fraction(re), as_fraction(im))

    def __add__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other: Union["ExactComplex", Rational]) -> "ExactComplex":
        if isinstance(other, ExactComplex):
            return ExactComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return ExactComplex(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conj(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def magnitude_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


ZERO = ExactComplex()
ONE = ExactComplex(Fraction(1))
I = ExactComplex(Fraction(0), Fraction(1))


def add(a: ExactComplex, b: ExactComplex) -> ExactComplex:
    return a + b


def mul(a: ExactComplex, b: ExactComplex) -> ExactComplex:
    return a * b


def magnitude_sq(c: ExactComplex) -> Fraction:
    return c.magnitude_sq()


def sqrt_fraction(x: Fraction, bits: int) -> Fraction:
    """Floor of sqrt(x) on the grid 2^-bits. Exact when x is a square on that grid."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError(f"sqrt of negative value {x}")
    scaled = (x.numerator << (2 * bits)) // x.denominator
    return Fraction(isqrt(scaled), 1 << bits)


def inv_sqrt_fraction(x: Fraction, bits: int) -> Fraction:
    """1/sqrt(x) to ``bits`` fractional bits (floor of sqrt(1/x))."""
    x = as_fraction(x)
    if x <= 0:
        raise ValueError(f"inverse sqrt of non-positive value {x}")
    return sqrt_fraction(1 / x, bits)
