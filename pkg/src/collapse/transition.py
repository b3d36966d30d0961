# -*- coding: utf-8 -*-
"""Information transitions and evolve/truncate/collapse cycles."""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.collapse.stability import StabilityPolicy, check_stability
from src.state.rng import derive_seed, stream
from src.state.statevec import PendingState, StateVector, apply_unitary_exact, basis_state, born_sample
from src.state.unitary import UnitarySpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollapseEvent:
    cycle_index: int
    step_index: int
    pre_support: int
    sampled_index: int
    lost_weight: Fraction
    seed_used: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle_index": self.cycle_index,
            "step_index": self.step_index,
            "pre_support": self.pre_support,
            "sampled_index": self.sampled_index,
            "lost_weight": str(self.lost_weight),
            "seed_used": self.seed_used,
        }

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "CollapseEvent":
        return cls(
            cycle_index=d["cycle_index"],
            step_index=d["step_index"],
            pre_support=d["pre_support"],
            sampled_index=d["sampled_index"],
            lost_weight=Fraction(d["lost_weight"]),
            seed_used=d["seed_used"],
        )


@dataclass
class Trajectory:
    events: List[CollapseEvent] = field(default_factory=list)
    final_state: Optional[StateVector] = None
    cycles: int = 0
    supports: List[int] = field(default_factory=list)  # committed support after each cycle

    def to_jsonl(self) -> str:
        return "".join(json.dumps(e.to_dict(), sort_keys=True) + "\n" for e in self.events)

    def write_jsonl(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_jsonl(), encoding="utf-8")
        return path


def information_transition(
    s: Union[StateVector, PendingState],
    seed: int,
    cycle_index: int = 0,
    step_index: int = 0,
) -> Tuple[StateVector, CollapseEvent]:
    """Replace ``s`` by a Born-sampled computational basis state."""
    j = born_sample(s, stream(seed))
    lost = s.truncated_weight() if isinstance(s, PendingState) else Fraction(0)
    event = CollapseEvent(
        cycle_index=cycle_index,
        step_index=step_index,
        pre_support=s.support,
        sampled_index=j,
        lost_weight=lost,
        seed_used=seed,
    )
    return basis_state(j, s.dimension, s.resolution), event


def evolve_step(
    state: StateVector,
    u: UnitarySpec,
    policy: StabilityPolicy,
    transition_seed: int,
    cycle_index: int,
    step_index: int,
) -> Tuple[StateVector, Optional[CollapseEvent]]:
    """One unitary, then either a commit or (if unstable) a transition on the exact product."""
    pending = apply_unitary_exact(state, u)
    verdict = check_stability(pending, policy)
    if verdict.unstable:
        return information_transition(pending, transition_seed, cycle_index, step_index)
    committed, _ = pending.commit()
    return committed, None


def evolve_cycle(
    s: StateVector,
    step: Sequence[UnitarySpec],
    cycles: int,
    policy: StabilityPolicy = StabilityPolicy.SUPPORT_COUNT,
    seed: int = 0,
) -> Trajectory:
    """Apply ``step`` ``cycles`` times, collapsing whenever the state turns unstable."""
    if cycles < 1:
        raise ValueError(f"cycles must be >= 1, got {cycles}")

    trajectory = Trajectory()
    state = s
    for cycle in range(1, cycles + 1):
        for k, u in enumerate(step):
            state, event = evolve_step(state, u, policy, derive_seed(seed, cycle, k), cycle, k)
            if event is not None:
                logger.debug("Cycle %d step %d: transition from support %d to |%d>",
                             cycle, k, event.pre_support, event.sampled_index)
                trajectory.events.append(event)
        trajectory.supports.append(state.support)

    trajectory.final_state = state
    trajectory.cycles = cycles
    logger.info("Evolved %d cycles with %d transitions", cycles, len(trajectory.events))
    return trajectory
