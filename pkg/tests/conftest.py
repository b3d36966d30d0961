# -*- coding: utf-8 -*-
"""Shared test fixtures."""

from fractions import Fraction

import numpy as np
import pytest

from src.diophantine.polynomial import DiophantinePolynomial, parse_polynomial
from src.numeric.fixedpoint import Resolution


@pytest.fixture
def mu4():
    return Resolution(4)


@pytest.fixture
def mu6():
    return Resolution(6)


@pytest.fixture
def mu8():
    return Resolution(8)


@pytest.fixture
def rng():
    """Seeded generator for drawing randomized test instances."""
    return np.random.default_rng(20240611)


@pytest.fixture
def circle25():
    """x^2 + y^2 - 25: roots (0,5), (3,4), (4,3), (5,0) in graded-lex order."""
    return parse_polynomial("x0^2 + x1^2 - 25")


@pytest.fixture
def no_root():
    return parse_polynomial("x^2 + 1")


@pytest.fixture
def half():
    return Fraction(1, 2)


@pytest.fixture
def results_dir(tmp_path, monkeypatch):
    """Point CMQM_RESULTS_PATH at a temp directory."""
    import src.config
    import src.runner.engine
    out = tmp_path / "results"
    monkeypatch.setattr(src.config, "RESULTS_PATH", out)
    monkeypatch.setattr(src.runner.engine, "RESULTS_PATH", out)
    return out


@pytest.fixture
def random_polynomial(rng):
    """Factory for random polynomials: arity <= 3, degree <= 4, coefficients in [-10, 10]."""

    def draw(max_arity: int = 3, max_degree: int = 4, max_terms: int = 4) -> DiophantinePolynomial:
        while True:
            arity = int(rng.integers(1, max_arity + 1))
            terms = []
            for _ in range(int(rng.integers(1, max_terms + 1))):
                exps = [0] * arity
                for _ in range(int(rng.integers(0, max_degree + 1))):
                    exps[int(rng.integers(0, arity))] += 1
                terms.append((int(rng.integers(-10, 11)), exps))
            terms.append((int(rng.integers(-10, 11)), [0] * arity))
            try:
                return DiophantinePolynomial.from_terms(terms, arity)
            except ValueError:
                continue  # cancelled to zero

    return draw
