# -*- coding: utf-8 -*-
"""
Bounded halting and the diagonal witness.

``bounded_halting`` can only confirm halting: a run that is still going when
the budget or the tape bound runs out yields UNKNOWN ("0_unknown"), never a
proof of divergence. ``diagonal_demo`` tabulates the diagonal function
r(n) = 0 if program n does not halt on n, r(n) diverges otherwise, against
what program n actually does on n.
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, List, Optional

from src.errors import TapeBoundExceeded
from src.turing.enumeration import program_from_index
from src.turing.machine import DEFAULT_TAPE_BOUND, RunResult, run_machine

logger = logging.getLogger(__name__)


class HaltVerdict(IntEnum):
    UNKNOWN = 0
    HALTS = 1

    @property
    def label(self) -> str:
        return "1" if self is HaltVerdict.HALTS else "0_unknown"


def _bounded_run(p_index: int, i: int, budget: int, tape_bound: int) -> Optional[RunResult]:
    p = program_from_index(p_index)
    try:
        return run_machine(p, i, budget, tape_bound)
    except TapeBoundExceeded as e:
        logger.warning("Program %d on input %d: %s", p_index, i, e)
        return None


def bounded_halting(p_index: int, i: int, budget: int, tape_bound: int = DEFAULT_TAPE_BOUND) -> HaltVerdict:
    """HALTS if program ``p_index`` halts on ``i`` within ``budget`` steps, else UNKNOWN."""
    result = _bounded_run(p_index, i, budget, tape_bound)
    return HaltVerdict.HALTS if result is not None and result.halted else HaltVerdict.UNKNOWN


class RowStatus(str, Enum):
    DECIDED = "DECIDED"
    UNDECIDED = "UNDECIDED"


@dataclass
class DiagonalRow:
    n: int
    hb: str
    r_value: Optional[int]
    r_diverges: bool
    status: RowStatus
    evidence: str
    program_steps: Optional[int] = None
    program_output: Optional[int] = None

    @property
    def behaviours_differ(self) -> bool:
        # program n halted on n while r(n) diverges
        return self.r_diverges and self.program_steps is not None


@dataclass
class DiagonalTable:
    budget: int
    rows: List[DiagonalRow] = field(default_factory=list)

    @property
    def decided(self) -> int:
        return sum(1 for r in self.rows if r.status is RowStatus.DECIDED)

    @property
    def contradictions(self) -> int:
        """Decided rows on which r(n) agrees with program n on n."""
        return sum(1 for r in self.rows if r.status is RowStatus.DECIDED and not r.behaviours_differ)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "budget": self.budget,
            "decided": self.decided,
            "undecided": len(self.rows) - self.decided,
            "contradictions": self.contradictions,
            "rows": [{**asdict(r), "status": r.status.value} for r in self.rows],
        }


def diagonal_demo(enum_limit: int, budget: int, tape_bound: int = DEFAULT_TAPE_BOUND) -> DiagonalTable:
    """One row per n < enum_limit comparing r(n) with program n run on n."""
    if enum_limit < 1:
        raise ValueError(f"enum_limit must be >= 1, got {enum_limit}")
    table = DiagonalTable(budget)
    for n in range(enum_limit):
        result = _bounded_run(n, n, budget, tape_bound)
        if result is not None and result.halted:
            table.rows.append(DiagonalRow(
                n=n, hb=HaltVerdict.HALTS.label, r_value=None, r_diverges=True,
                status=RowStatus.DECIDED,
                evidence=f"program {n} halts on {n} after {result.steps} steps with output {result.output}; r({n}) diverges",
                program_steps=result.steps, program_output=result.output,
            ))
        else:
            table.rows.append(DiagonalRow(
                n=n, hb=HaltVerdict.UNKNOWN.label, r_value=0, r_diverges=False,
                status=RowStatus.UNDECIDED,
                evidence=f"program {n} did not halt on {n} within {budget} steps; r({n}) = 0 differs only if it never halts",
            ))
    logger.info("Diagonal table: %d rows, %d decided, %d contradictions",
                len(table.rows), table.decided, table.contradictions)
    return table
