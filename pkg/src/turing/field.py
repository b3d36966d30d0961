# -*- coding: utf-8 -*-
"""
Finite Turing field: M machines searching a Diophantine domain in lockstep.

Domain inputs, in graded-lex order, are dealt round-robin to the machines.
Each tick every busy machine advances ``steps_per_tick`` evaluation steps, an
input costing one step per polynomial term. When some machine completes an
input with D(x) = 0 it raises a halt message that travels a token ring at
``message_rate`` deliveries per tick, so the whole field has stopped
ceil((M - 1) / V) ticks after the discovery.
"""

import logging
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Deque, Dict, List, Optional, Tuple

from src.diophantine.domain import Point, SearchDomain
from src.diophantine.polynomial import DiophantinePolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TuringFieldConfig:
    machine_count: int = 4
    message_rate: int = 1
    steps_per_tick: int = 1
    tape_bound: int = 4096
    tick_budget: int = 1_000_000

    def __post_init__(self):
        for name in ("machine_count", "message_rate", "steps_per_tick", "tape_bound", "tick_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")

    def scaled(self, factor: int) -> "TuringFieldConfig":
        return TuringFieldConfig(
            machine_count=self.machine_count * factor,
            message_rate=self.message_rate * factor,
            steps_per_tick=self.steps_per_tick,
            tape_bound=self.tape_bound,
            tick_budget=self.tick_budget * factor,
        )


class FieldStatus(str, Enum):
    FIRST_SOLUTION = "first_solution"
    EXHAUSTED = "exhausted"


@dataclass
class FieldResult:
    status: FieldStatus
    solution: Optional[Point] = None
    discovery_tick: Optional[int] = None
    global_halt_tick: Optional[int] = None
    ticks_used: int = 0
    inputs_evaluated: int = 0
    memory_overflows: List[Point] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status is FieldStatus.FIRST_SOLUTION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "solution": list(self.solution) if self.solution is not None else None,
            "discovery_tick": self.discovery_tick,
            "global_halt_tick": self.global_halt_tick,
            "ticks_used": self.ticks_used,
            "inputs_evaluated": self.inputs_evaluated,
            "memory_overflows": [list(x) for x in self.memory_overflows],
        }


def halt_latency(machine_count: int, message_rate: int) -> int:
    """Ticks for a halt token to reach every other machine of the ring."""
    informed, ticks = 1, 0
    while informed < machine_count:
        informed += message_rate
        ticks += 1
    return ticks


class _Machine:
    """One field machine: a queue of (enumeration index, point) and the partial cost of its head input."""

    def __init__(self, work: Deque[Tuple[int, Point]]):
        self.work = work
        self.progress = 0

    @property
    def busy(self) -> bool:
        return bool(self.work)

    def advance(self, steps: int, cost: int) -> List[Tuple[int, Point]]:
        """Spend ``steps`` evaluation steps; return the inputs completed."""
        done = []
        self.progress += steps
        while self.work and self.progress >= cost:
            self.progress -= cost
            done.append(self.work.popleft())
        if not self.work:
            self.progress = 0
        return done


def _evaluate(D: DiophantinePolynomial, x: Point, tape_bound: int) -> Tuple[int, bool]:
    """D(x), and whether some term outgrew the tape."""
    total = 0
    for coeff, exps in D.terms:
        v = coeff
        for xi, e in zip(x, exps):
            if e:
                v *= xi ** e
        if v.bit_length() > tape_bound:
            return 0, True
        total += v
    return total, False


def field_search(D: DiophantinePolynomial, dom: SearchDomain, cfg: TuringFieldConfig) -> FieldResult:
    """Tick-by-tick search of ``dom``; the first root reported is the one the field prints."""
    if D.arity != dom.arity:
        raise ValueError(f"polynomial arity {D.arity} does not match domain arity {dom.arity}")
    start = time.time()
    cost = D.term_count
    queues: List[Deque[Tuple[int, Point]]] = [deque() for _ in range(cfg.machine_count)]
    for k, x in enumerate(dom):
        queues[k % cfg.machine_count].append((k, x))
    machines = [_Machine(q) for q in queues]

    result = FieldResult(FieldStatus.EXHAUSTED)
    tick = 0
    while tick < cfg.tick_budget and any(m.busy for m in machines):
        tick += 1
        roots: List[Tuple[int, Point]] = []
        for m in machines:
            if not m.busy:
                continue
            for k, x in m.advance(cfg.steps_per_tick, cost):
                result.inputs_evaluated += 1
                value, overflow = _evaluate(D, x, cfg.tape_bound)
                if overflow:
                    result.memory_overflows.append(x)
                elif value == 0:
                    roots.append((k, x))
        if roots:
            _, x = min(roots)
            result.status = FieldStatus.FIRST_SOLUTION
            result.solution = x
            result.discovery_tick = tick
            result.global_halt_tick = tick + halt_latency(cfg.machine_count, cfg.message_rate)
            break
    result.ticks_used = tick

    if result.memory_overflows:
        logger.warning("Field search: %d inputs overflowed the %d-cell tape", len(result.memory_overflows), cfg.tape_bound)
    logger.info("Field search M=%d V=%d over %d points: %s at tick %s (halt %s) in %.3fs",
                cfg.machine_count, cfg.message_rate, dom.size, result.status.value,
                result.discovery_tick, result.global_halt_tick, time.time() - start)
    return result


@dataclass
class InfiniteFieldResult:
    rounds: List[Dict[str, Any]] = field(default_factory=list)
    result: Optional[FieldResult] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"rounds": self.rounds, "result": self.result.to_dict() if self.result else None}


def emulate_infinite_field(D: DiophantinePolynomial, cfg: TuringFieldConfig, max_rounds: int = 8,
                           start_cutoff: int = 2) -> InfiniteFieldResult:
    """Approach an unbounded field by doubling cutoff, machines and message rate each round."""
    if max_rounds < 1:
        raise ValueError(f"max_rounds must be >= 1, got {max_rounds}")
    out = InfiniteFieldResult()
    for r in range(max_rounds):
        factor = 1 << r
        dom = SearchDomain(D.arity, start_cutoff * factor)
        res = field_search(D, dom, cfg.scaled(factor))
        out.rounds.append({
            "round": r,
            "cutoff": dom.cutoff,
            "machine_count": cfg.machine_count * factor,
            "message_rate": cfg.message_rate * factor,
            "status": res.status.value,
            "ticks_used": res.ticks_used,
        })
        out.result = res
        if res.found:
            break
    return out
