# -*- coding: utf-8 -*-
"""Experiment registry - maps experiment names to runners."""

from typing import Dict, List, Optional

from src.runner.base import Experiment
from src.runner.models import ExperimentName


class ExperimentRegistry:
    """Registry for experiments, keyed by subcommand name."""

    def __init__(self):
        self._by_name: Dict[ExperimentName, Experiment] = {}

    def register(self, experiment: Experiment):
        self._by_name[experiment.name] = experiment

    def get(self, name) -> Optional[Experiment]:
        try:
            return self._by_name.get(ExperimentName(name))
        except ValueError:
            return None

    def names(self) -> List[str]:
        return [n.value for n in ExperimentName if n in self._by_name]

    def experiments(self) -> List[Experiment]:
        return [self._by_name[n] for n in ExperimentName if n in self._by_name]


# Global singleton
_registry = ExperimentRegistry()


def get_registry() -> ExperimentRegistry:
    return _registry


def init_experiments():
    """Register every built-in experiment."""
    from src.runner.experiments import ALL_EXPERIMENTS
    for cls in ALL_EXPERIMENTS:
        _registry.register(cls())
