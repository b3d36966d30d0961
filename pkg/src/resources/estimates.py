# -*- coding: utf-8 -*-
"""
Log-space resource bounds of a universe-sized computer.

Memory M = e^(S/k_B) * mu bits and rate V = 2^(mu/2) * e^(S/k_B) * E/hbar
operations per second are astronomically large, so everything here is a
base-2 logarithm evaluated with mpmath; the raw quantities are never formed.
Microstate counts may be given as S/k_B or directly as log2 of e^(S/k_B).
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

import mpmath

PRECISION_BITS = 256
Real = Union[int, float, str, mpmath.mpf]

# Human computing stock: 10^9 computers with 10^12 bits each, running at 10^9 Hz
# with 10^5 operations per cycle.
HUMAN_COMPUTERS = 10 ** 9
HUMAN_MEMORY_BITS = HUMAN_COMPUTERS * 10 ** 12
HUMAN_OPS_PER_SEC = HUMAN_COMPUTERS * 10 ** 9 * 10 ** 5
# Information content of the observable universe, gravitational degrees included.
COSMOLOGICAL_BITS = 10 ** 120


def _mpf(x: Real) -> mpmath.mpf:
    return mpmath.mpf(x) if not isinstance(x, str) else mpmath.mpf(x.strip())


def log2(x: Real) -> mpmath.mpf:
    """Base-2 logarithm, exact on powers of two."""
    with mpmath.workprec(PRECISION_BITS):
        mantissa, exponent = mpmath.frexp(_mpf(x))
        if mantissa == 0.5:
            return mpmath.mpf(exponent - 1)
        return exponent + mpmath.log(mantissa) / mpmath.log(2)


def log2_microstates(S_over_kB: Optional[Real] = None, log2_states: Optional[Real] = None) -> mpmath.mpf:
    """log2 e^(S/k_B), from exactly one of the two forms."""
    if (S_over_kB is None) == (log2_states is None):
        raise ValueError("give exactly one of S_over_kB and log2_states")
    with mpmath.workprec(PRECISION_BITS):
        if log2_states is not None:
            value = _mpf(log2_states)
        else:
            value = _mpf(S_over_kB) / mpmath.log(2)
        if value < 0:
            raise ValueError(f"entropy must be non-negative, got log2 e^(S/k_B) = {value}")
        return +value


def _check_mu(mu: Real) -> mpmath.mpf:
    mu = _mpf(mu)
    if mu < 1:
        raise ValueError(f"mu must be >= 1, got {mu}")
    return mu


def estimate_memory(S_over_kB: Optional[Real] = None, mu: Real = 1, *,
                    log2_states: Optional[Real] = None) -> mpmath.mpf:
    """log2 M = S/k_B * log2(e) + log2(mu)."""
    with mpmath.workprec(PRECISION_BITS):
        return log2_microstates(S_over_kB, log2_states) + log2(_check_mu(mu))


def estimate_ops(S_over_kB: Optional[Real] = None, mu: Real = 1, E_over_hbar: Real = 1, *,
                 log2_states: Optional[Real] = None) -> mpmath.mpf:
    """log2 V = mu/2 + S/k_B * log2(e) + log2(E/hbar)."""
    with mpmath.workprec(PRECISION_BITS):
        rate = _mpf(E_over_hbar)
        if rate <= 0:
            raise ValueError(f"E/hbar must be positive, got {rate}")
        mu = _mpf(mu)
        if mu < 0:
            raise ValueError(f"mu must be non-negative, got {mu}")
        return mu / 2 + log2_microstates(S_over_kB, log2_states) + log2(rate)


def _fmt(x: mpmath.mpf) -> str:
    return mpmath.nstr(x, 30, min_fixed=-5, max_fixed=40)


@dataclass
class ResourceEstimate:
    log2_microstates: mpmath.mpf
    mu: mpmath.mpf
    E_over_hbar: mpmath.mpf
    log2_mu_term: mpmath.mpf
    log2_memory_bits: mpmath.mpf
    log2_ops_per_sec: mpmath.mpf

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inputs": {
                "log2_microstates": _fmt(self.log2_microstates),
                "mu": _fmt(self.mu),
                "E_over_hbar": _fmt(self.E_over_hbar),
            },
            "log2_mu_term": _fmt(self.log2_mu_term),
            "log2_memory_bits": _fmt(self.log2_memory_bits),
            "log2_ops_per_sec": _fmt(self.log2_ops_per_sec),
        }


def estimate_resources(S_over_kB: Optional[Real] = None, mu: Real = 1, E_over_hbar: Real = 1, *,
                       log2_states: Optional[Real] = None) -> ResourceEstimate:
    with mpmath.workprec(PRECISION_BITS):
        return ResourceEstimate(
            log2_microstates=log2_microstates(S_over_kB, log2_states),
            mu=_check_mu(mu),
            E_over_hbar=_mpf(E_over_hbar),
            log2_mu_term=log2(_check_mu(mu)),
            log2_memory_bits=estimate_memory(S_over_kB, mu, log2_states=log2_states),
            log2_ops_per_sec=estimate_ops(S_over_kB, mu, E_over_hbar, log2_states=log2_states),
        )


def ordering(a: mpmath.mpf, b: mpmath.mpf) -> str:
    if a > b:
        return "greater"
    if a < b:
        return "less"
    return "equal"


def _against(value: mpmath.mpf, reference: int) -> Dict[str, str]:
    with mpmath.workprec(PRECISION_BITS):
        ref = log2(reference)
        return {
            "log2_reference": _fmt(ref),
            "log2_ratio": _fmt(value - ref),
            "ordering": ordering(value, ref),
        }


def compare_reference(estimate: ResourceEstimate) -> Dict[str, Dict[str, str]]:
    """Where the estimate stands against human computing and the cosmological information bound."""
    return {
        "memory_vs_human_stock": _against(estimate.log2_memory_bits, HUMAN_MEMORY_BITS),
        "ops_vs_human_stock": _against(estimate.log2_ops_per_sec, HUMAN_OPS_PER_SEC),
        "memory_vs_cosmological_bound": _against(estimate.log2_memory_bits, COSMOLOGICAL_BITS),
    }


def field_bounds(mu: Real) -> Dict[str, str]:
    """log2 of the largest finite Turing field (mu) and of the U_D matrix element count (2 mu)."""
    with mpmath.workprec(PRECISION_BITS):
        mu = _check_mu(mu)
        return {
            "mu": _fmt(mu),
            "log2_max_turing_machines": _fmt(mu),
            "log2_max_U_D_elements": _fmt(2 * mu),
        }
