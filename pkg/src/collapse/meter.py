# -*- coding: utf-8 -*-
"""
Meter model: a spin coupled to a three-level pointer.

Joint basis index = system * 3 + meter. System 0 = |+>_z, 1 = |->_z; meter
levels 0 = |0>_M (ready), 1 = |+>_M, 2 = |->_M.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

from src.collapse.transition import CollapseEvent, information_transition
from src.config import DEFAULT_MU
from src.numeric.exact import ExactComplex, inv_sqrt_fraction
from src.numeric.fixedpoint import Resolution
from src.state.rng import derive_seed
from src.state.statevec import StateVector, apply_unitary, basis_state, from_amplitudes
from src.state.unitary import Permutation

logger = logging.getLogger(__name__)

METER_DIMENSION = 6
SYSTEM_SIGNS = ("+", "-")
METER_SIGNS = ("0", "+", "-")

# |+z>|0> <-> |+z>|+M>, |-z>|0> <-> |-z>|-M>; other joint states fixed
METER_INTERACTION = Permutation({0: 1, 1: 0, 3: 5, 5: 3})


@dataclass(frozen=True)
class MeterOutcome:
    system: str
    meter: str
    index: int
    event: Optional[CollapseEvent] = None

    @property
    def label(self) -> str:
        return f"({self.system},{self.meter})"

    @property
    def cross_correlated(self) -> bool:
        return self.meter != "0" and self.meter != self.system

    @classmethod
    def from_index(cls, j: int, event: Optional[CollapseEvent] = None) -> "MeterOutcome":
        return cls(SYSTEM_SIGNS[j // 3], METER_SIGNS[j % 3], j, event)


def prepare_input(mu: Optional[int], input_basis: str = "x") -> StateVector:
    """System in |+>_x (equal superposition of z states) or |+>_z, meter ready."""
    r = None if mu is None else Resolution(mu)
    if input_basis == "z":
        return basis_state(0, METER_DIMENSION, r)
    if input_basis != "x":
        raise ValueError(f"input_basis must be 'x' or 'z', got {input_basis!r}")
    if r is None:
        raise ValueError("|+>_x has no exact rational amplitudes; use a finite mu")
    h = ExactComplex(inv_sqrt_fraction(Fraction(2), r.working_bits))
    return from_amplitudes({0: h, 3: h}, METER_DIMENSION, r)


@lru_cache(maxsize=32)
def entangled_state(mu: int, input_basis: str = "x") -> StateVector:
    return apply_unitary(prepare_input(mu, input_basis), METER_INTERACTION)


def meter_demo(seed: int, mu: int = DEFAULT_MU, input_basis: str = "x") -> MeterOutcome:
    """Entangle system and meter, then run one information transition."""
    _, event = information_transition(entangled_state(mu, input_basis), seed)
    return MeterOutcome.from_index(event.sampled_index, event)


def meter_statistics(trials: int, seed: int, mu: int = DEFAULT_MU, input_basis: str = "x") -> Dict[str, int]:
    """Outcome label counts over ``trials`` independent transitions (trial k uses derive_seed(seed, k))."""
    counts: Counter = Counter()
    for k in range(trials):
        outcome = meter_demo(derive_seed(seed, k), mu, input_basis)
        counts[outcome.label] += 1
        if outcome.cross_correlated:
            logger.error("Cross-correlated meter outcome %s at trial %d", outcome.label, k)
    logger.info("Meter statistics over %d trials: %s", trials, dict(counts))
    return dict(sorted(counts.items()))
