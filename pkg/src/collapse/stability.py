# -*- coding: utf-8 -*-
"""Computational-instability detection."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from src.state.statevec import PendingState, StateVector


class StabilityPolicy(str, Enum):
    SUPPORT_COUNT = "support_count"
    HILBERT_DIMENSION = "hilbert_dimension"


class StabilityStatus(str, Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    status: StabilityStatus
    trigger_support: int
    bound: Optional[int]  # None in EXACT mode

    @property
    def unstable(self) -> bool:
        return self.status is StabilityStatus.UNSTABLE


def check_stability(
    s: Union[StateVector, PendingState],
    policy: StabilityPolicy = StabilityPolicy.SUPPORT_COUNT,
) -> StabilityVerdict:
    """Unstable iff the policy's measure (support or dimension) exceeds 2^mu."""
    policy = StabilityPolicy(policy)
    measure = s.support if policy is StabilityPolicy.SUPPORT_COUNT else s.dimension
    if s.resolution is None:
        return StabilityVerdict(StabilityStatus.STABLE, measure, None)
    bound = s.resolution.coherence_bound
    status = StabilityStatus.UNSTABLE if measure > bound else StabilityStatus.STABLE
    return StabilityVerdict(status, measure, bound)
