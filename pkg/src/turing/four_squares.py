# -*- coding: utf-8 -*-
"""
Search for the smallest natural number that is not a sum of x squares.

Each window [0, W) is settled by building the x-fold sumset of the squares
below W as a boolean table; W doubles until a gap shows up or the candidate
budget is spent. For x >= 4 no gap exists and the search never halts.
"""

import logging

import numpy as np

from src.turing.machine import RunResult, RunStatus

logger = logging.getLogger(__name__)

START_WINDOW = 64


def sums_of_squares(x: int, window: int) -> np.ndarray:
    """reachable[k] is True iff k < window is a sum of x squares of naturals."""
    squares = np.arange(int(np.sqrt(window)) + 2) ** 2
    squares = squares[squares < window]
    reachable = np.zeros(window, dtype=bool)
    reachable[0] = True
    for _ in range(x):
        nxt = np.zeros(window, dtype=bool)
        for s in squares:
            nxt[s:] |= reachable[:window - s]
        reachable = nxt
    return reachable


def four_squares_demo(x: int, budget: int = 1_000_000) -> RunResult:
    """Halted(n) for the first n not a sum of x squares, or Exhausted after ``budget`` candidates."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    window = min(START_WINDOW, budget)
    while True:
        reachable = sums_of_squares(x, window)
        gaps = np.flatnonzero(~reachable)
        if gaps.size:
            n = int(gaps[0])
            return RunResult(RunStatus.HALTED, n + 1, n)
        if window == budget:
            logger.info("No number below %d misses being a sum of %d squares", budget, x)
            return RunResult(RunStatus.EXHAUSTED, budget)
        window = min(window * 2, budget)
