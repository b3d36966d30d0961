# -*- coding: utf-8 -*-
"""
Ground-state decision for Diophantine polynomials over a finite domain.

The deterministic mode minimises D(x)^2 over the enumerated domain; the
sampled mode prepares the uniform superposition and measures the observable
shot by shot. ``classical_oracle`` is the plain loop both are checked against.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from src.config import DEFAULT_MU
from src.diophantine.domain import Point, SearchDomain
from src.diophantine.observable import build_observable, squared_values
from src.diophantine.polynomial import DiophantinePolynomial, eval_poly
from src.errors import ResolutionExceeded
from src.numeric.fixedpoint import Resolution
from src.state.rng import stream
from src.state.statevec import measure_observable, uniform_superposition

logger = logging.getLogger(__name__)


class DecisionOutcome(str, Enum):
    SOLUTION_FOUND = "solution_found"
    NO_SOLUTION = "no_solution_within_hmu"


class DecisionMode(str, Enum):
    DETERMINISTIC = "deterministic"
    SAMPLED = "sampled"
    CLASSICAL = "classical"


@dataclass
class Decision:
    outcome: DecisionOutcome
    ground_energy: int
    domain: SearchDomain
    mode: DecisionMode
    solution: Optional[Point] = None
    shots: Optional[int] = None
    shots_used: Optional[int] = None
    confidence: Optional[float] = None

    @property
    def found(self) -> bool:
        return self.outcome is DecisionOutcome.SOLUTION_FOUND

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "solution": list(self.solution) if self.solution is not None else None,
            "ground_energy": self.ground_energy,
            "domain": self.domain.to_dict(),
            "mode": self.mode.value,
            "shots": self.shots,
            "shots_used": self.shots_used,
            "confidence": self.confidence,
        }


def _decision(energy: int, solution: Optional[Point], dom: SearchDomain, mode: DecisionMode, **extra) -> Decision:
    outcome = DecisionOutcome.SOLUTION_FOUND if energy == 0 else DecisionOutcome.NO_SOLUTION
    return Decision(outcome, energy, dom, mode, solution if energy == 0 else None, **extra)


def detection_confidence(domain_size: int, shots: int) -> float:
    """Chance that ``shots`` uniform draws hit a given root: 1 - (1 - 1/N)^shots."""
    return float(-np.expm1(shots * np.log1p(-1.0 / domain_size))) if domain_size > 1 else 1.0


def decide_solution(
    D: DiophantinePolynomial,
    dom: SearchDomain,
    mode: str = "deterministic",
    mu: int = DEFAULT_MU,
    shots: int = 64,
    seed: int = 0,
) -> Decision:
    """Decide whether D has a root in ``dom`` without leaving the 2^mu coherence bound."""
    mode = DecisionMode(mode)
    r = Resolution(mu)
    if dom.size > r.coherence_bound:
        raise ResolutionExceeded(
            f"domain {{0..{dom.cutoff - 1}}}^{dom.arity} has {dom.size} points, more than 2^{mu}"
        )

    start = time.time()
    if mode is DecisionMode.DETERMINISTIC:
        energies = squared_values(D, dom)
        best = int(np.argmin(energies))
        decision = _decision(int(energies[best]), dom.point(best), dom, mode)
    elif mode is DecisionMode.SAMPLED:
        decision = _sampled(D, dom, r, shots, seed)
    else:
        raise ValueError(f"decide_solution runs deterministic or sampled, got {mode.value!r}")

    logger.info("Decision %s over %d points (%s): %s, E_g=%d in %.3fs",
                mode.value, dom.size, D, decision.outcome.value, decision.ground_energy, time.time() - start)
    return decision


def _sampled(D: DiophantinePolynomial, dom: SearchDomain, r: Resolution, shots: int, seed: int) -> Decision:
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    observable = build_observable(D, dom)
    state = uniform_superposition(dom.size, r)
    lowest: Optional[int] = None
    hit: Optional[Point] = None
    used = 0
    for shot in range(shots):
        energy, collapsed = measure_observable(state, observable, stream(seed, shot))
        used += 1
        if lowest is None or energy < lowest:
            lowest = int(energy)
        if energy == 0:
            (index,) = collapsed.amplitudes
            hit = dom.point(index)
            break
    confidence = 1.0 if hit is not None else detection_confidence(dom.size, used)
    return _decision(lowest, hit, dom, DecisionMode.SAMPLED, shots=shots, shots_used=used, confidence=confidence)


def classical_oracle(D: DiophantinePolynomial, cutoff: int) -> Decision:
    """Exhaustive graded-lex loop over {0..cutoff-1}^n; stops at the first root."""
    dom = SearchDomain(D.arity, cutoff)
    lowest: Optional[int] = None
    for x in dom:
        energy = eval_poly(D, x) ** 2
        if lowest is None or energy < lowest:
            lowest = energy
        if energy == 0:
            return _decision(0, x, dom, DecisionMode.CLASSICAL)
    return _decision(lowest, None, dom, DecisionMode.CLASSICAL)

