# -*- coding: utf-8 -*-
"""
Certified lower bounds on the halting probability.

Omega_{L,t} sums 2^-|p| over codewords p of length <= L whose program halts
on the empty tape within t steps. The sum is exact and grows with both L
and t; Kraft's inequality keeps it below 1.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.chaitin.prefix_free import decode_codeword, enumerate_prefix_free, is_prefix_free
from src.config import TRIAL_WORKERS
from src.errors import TapeBoundExceeded
from src.turing.machine import DEFAULT_TAPE_BOUND, run_machine

logger = logging.getLogger(__name__)


def omega_from_programs(lengths: Iterable[int]) -> Fraction:
    """Exact sum of 2^-l."""
    return sum((Fraction(1, 1 << l) for l in lengths), Fraction(0))


@dataclass
class OmegaEstimate:
    value: Fraction
    L: int
    t: int
    programs: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def den_pow2(self) -> int:
        return self.value.denominator.bit_length() - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "L": self.L,
            "t": self.t,
            "omega_num": self.value.numerator,
            "omega_den_pow2": self.den_pow2,
            "programs": [[bits, length] for bits, length in self.programs],
        }

    def write_json(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), sort_keys=True), encoding="utf-8")
        return path


def halts_within(bits: str, t: int, tape_bound: int = DEFAULT_TAPE_BOUND) -> bool:
    """Whether codeword ``bits`` halts on the empty tape within t steps."""
    try:
        return run_machine(decode_codeword(bits), None, t, tape_bound).halted
    except TapeBoundExceeded:
        return False


def _halts_batch(args: Tuple[List[str], int]) -> List[bool]:
    codes, t = args
    return [halts_within(bits, t) for bits in codes]


def omega_lower_bound(L: int, t: int, workers: int = TRIAL_WORKERS) -> OmegaEstimate:
    """Omega_{L,t}: halting codewords counted in codeword order."""
    return omega_over_codewords(enumerate_prefix_free(L), t, workers, L)


def omega_over_codewords(codes: Sequence[str], t: int, workers: int = TRIAL_WORKERS,
                         L: Optional[int] = None) -> OmegaEstimate:
    """Lower bound from a chosen prefix-free set of codewords.

    Any subset of the canonical codewords gives a lower bound, including
    multi-state codewords longer than MAX_PREFIX_FREE_L.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    codes = list(codes)
    for bits in codes:
        decode_codeword(bits)
    if not is_prefix_free(codes):
        raise ValueError("codewords are not prefix-free")
    if L is None:
        L = max((len(c) for c in codes), default=0)
    start = time.time()
    if workers > 1 and codes:
        size = -(-len(codes) // workers)
        chunks = [codes[i:i + size] for i in range(0, len(codes), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = [f for batch in pool.map(_halts_batch, [(c, t) for c in chunks]) for f in batch]
    else:
        flags = _halts_batch((codes, t))

    programs = [(bits, len(bits)) for bits, halted in zip(codes, flags) if halted]
    estimate = OmegaEstimate(omega_from_programs(n for _, n in programs), L, t, programs)
    logger.info("Omega_{%d,%d} = %s (%d of %d codewords halt) in %.3fs",
                L, t, estimate.value, len(programs), len(codes), time.time() - start)
    return estimate
