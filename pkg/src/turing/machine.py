# -*- coding: utf-8 -*-
"""
Single-tape Turing machines over the symbols {0, 1, blank}.

States are numbered 1..n; a transition writes a symbol, moves the head one
cell left or right and names the next state, 0 meaning HALT. Inputs are
written in binary, most significant bit first, with the head on the leftmost
bit (0 is written as the single bit "0"; ``None`` leaves the tape blank).
Output is the binary number read from the leftmost non-blank cell up to the
next blank, 0 when the tape is blank. Every executed transition counts as one
step, the halting one included.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from src.errors import TapeBoundExceeded

logger = logging.getLogger(__name__)

BLANK = 2
SYMBOLS = (0, 1, BLANK)
LEFT, RIGHT = 0, 1
HALT = 0
DEFAULT_TAPE_BOUND = 1 << 20

_MOVE_NAMES = {LEFT: "L", RIGHT: "R"}
_MOVE_CODES = {"L": LEFT, "R": RIGHT}


class Transition(NamedTuple):
    write: int
    move: int
    next: int


@dataclass(frozen=True)
class MachineProgram:
    """Transition table indexed by (state - 1) * 3 + symbol."""

    states: int
    transitions: Tuple[Transition, ...]

    def __post_init__(self):
        if self.states < 1:
            raise ValueError(f"a machine needs at least one state, got {self.states}")
        table = tuple(Transition(*t) for t in self.transitions)
        if len(table) != 3 * self.states:
            raise ValueError(f"{self.states}-state machine needs {3 * self.states} transitions, got {len(table)}")
        for t in table:
            if t.write not in SYMBOLS or t.move not in (LEFT, RIGHT) or not 0 <= t.next <= self.states:
                raise ValueError(f"invalid transition {tuple(t)}")
        object.__setattr__(self, "transitions", table)

    def transition(self, state: int, symbol: int) -> Transition:
        return self.transitions[(state - 1) * 3 + symbol]

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for state in range(1, self.states + 1):
            for symbol in SYMBOLS:
                t = self.transition(state, symbol)
                rows.append([state, symbol, t.write, _MOVE_NAMES[t.move], t.next])
        return {"states": self.states, "transitions": rows}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "MachineProgram":
        """Program exchange form; every (state, symbol) pair must appear exactly once."""
        states = int(d["states"])
        table: Dict[Tuple[int, int], Transition] = {}
        for state, symbol, write, move, nxt in d["transitions"]:
            key = (int(state), int(symbol))
            if key in table:
                raise ValueError(f"duplicate transition for state {state} symbol {symbol}")
            if move not in _MOVE_CODES:
                raise ValueError(f"move must be 'L' or 'R', got {move!r}")
            table[key] = Transition(int(write), _MOVE_CODES[move], int(nxt))
        missing = [(q, s) for q in range(1, states + 1) for s in SYMBOLS if (q, s) not in table]
        if missing or len(table) != 3 * states:
            raise ValueError(f"transition map is not total over {states} states; missing {missing[:3]}")
        return cls(states, tuple(table[(q, s)] for q in range(1, states + 1) for s in SYMBOLS))


class RunStatus(str, Enum):
    HALTED = "halted"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class RunResult:
    status: RunStatus
    steps: int
    output: Optional[int] = None

    @property
    def halted(self) -> bool:
        return self.status is RunStatus.HALTED

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status.value, "steps": self.steps, "output": self.output}


def encode_input(value: Optional[int]) -> List[int]:
    if value is None:
        return []
    if value < 0:
        raise ValueError(f"input must be a natural number, got {value}")
    return [int(b) for b in format(value, "b")]


def decode_output(tape: Dict[int, int]) -> int:
    if not tape:
        return 0
    pos = min(tape)
    out = 0
    while tape.get(pos, BLANK) != BLANK:
        out = (out << 1) | tape[pos]
        pos += 1
    return out


def run_machine(p: MachineProgram, value: Optional[int], step_budget: int,
                tape_bound: int = DEFAULT_TAPE_BOUND) -> RunResult:
    """Run p on ``value`` for at most ``step_budget`` steps.

    Raises TapeBoundExceeded once the span of visited cells (input included)
    exceeds ``tape_bound``.
    """
    if step_budget < 1:
        raise ValueError(f"step budget must be >= 1, got {step_budget}")
    tape = {i: b for i, b in enumerate(encode_input(value))}
    lo, hi = 0, max(len(tape) - 1, 0)
    if hi - lo + 1 > tape_bound:
        raise TapeBoundExceeded(f"input needs {hi - lo + 1} cells, tape bound is {tape_bound}")

    table = p.transitions
    state, head, steps = 1, 0, 0
    while steps < step_budget:
        if head < lo or head > hi:
            lo, hi = min(lo, head), max(hi, head)
            if hi - lo + 1 > tape_bound:
                raise TapeBoundExceeded(f"head visited {hi - lo + 1} cells after {steps} steps, bound is {tape_bound}")
        write, move, nxt = table[(state - 1) * 3 + tape.get(head, BLANK)]
        if write == BLANK:
            tape.pop(head, None)
        else:
            tape[head] = write
        head += 1 if move == RIGHT else -1
        steps += 1
        if nxt == HALT:
            return RunResult(RunStatus.HALTED, steps, decode_output(tape))
        state = nxt
    return RunResult(RunStatus.EXHAUSTED, steps)


# ── Reference machines ──

def _uniform(states: int, rule) -> MachineProgram:
    return MachineProgram(states, tuple(rule(q, s) for q in range(1, states + 1) for s in SYMBOLS))


def immediate_halt() -> MachineProgram:
    """Rewrites the scanned symbol and halts: output equals input after one step."""
    return _uniform(1, lambda q, s: Transition(s, LEFT, HALT))


def right_runner() -> MachineProgram:
    """Moves right forever without changing the tape."""
    return _uniform(1, lambda q, s: Transition(s, RIGHT, 1))


def busy_beaver_2() -> MachineProgram:
    """Two-state champion (blank read as 0): halts after 6 steps leaving four 1s."""
    a = Transition(1, RIGHT, 2), Transition(1, LEFT, 2), Transition(1, RIGHT, 2)
    b = Transition(1, LEFT, 1), Transition(1, RIGHT, HALT), Transition(1, LEFT, 1)
    return MachineProgram(2, a + b)
