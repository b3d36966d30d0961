# -*- coding: utf-8 -*-
"""Abstract base class for experiments."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple, Type

from src.runner.models import ExperimentName, Params

# (file suffix, writer taking the target path)
Artifact = Tuple[str, Callable[[Path], Path]]


@dataclass
class ExperimentOutput:
    payload: Dict[str, Any]
    artifacts: List[Artifact] = field(default_factory=list)


class Experiment(ABC):
    """One runnable experiment: a parameter schema plus a seeded run."""

    name: ExperimentName
    params_model: Type[Params]
    summary: str = ""

    @abstractmethod
    def run(self, params: Params, seed: int) -> ExperimentOutput:
        """Run with validated parameters. The payload must depend only on (params, seed)."""
        ...
