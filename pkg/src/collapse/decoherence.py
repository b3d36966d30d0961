# -*- coding: utf-8 -*-
"""
Decoherence experiment.

A system qubit (qubit 0) starts in |+>. Cycle c couples it to a fresh
environment qubit c through a controlled Pythagorean rotation, then commits
or, when the state turns unstable, collapses. The reported quantity is the
off-diagonal element |rho_01| of the system's reduced density matrix.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from src.collapse.stability import StabilityPolicy
from src.collapse.transition import evolve_step
from src.config import TRIAL_WORKERS
from src.numeric.exact import ExactComplex, ZERO
from src.numeric.fixedpoint import Resolution
from src.state.rng import derive_seed, stream
from src.state.statevec import StateVector, apply_unitary, basis_state
from src.state.unitary import controlled_rotation, gate, hadamard

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("cycle", "mean_offdiag", "ci_low", "ci_high")
BOOTSTRAP_SAMPLES = 1000
HADAMARD_BITS = 128


def reduced_offdiagonal(s: StateVector) -> ExactComplex:
    """rho_01 of qubit 0 after tracing out every other qubit, normalized by norm^2."""
    amps = s.exact_amplitudes()
    acc = ZERO
    for j, a in amps.items():
        if j & 1:
            continue
        b = amps.get(j | 1)
        if b is not None:
            acc = acc + a * b.conj()
    return acc * (1 / s.norm_sq())


def initial_state(cycles: int, mu: Union[int, None], initial: str = "plus") -> StateVector:
    r = None if mu is None else Resolution(mu)
    dimension = 1 << (cycles + 1)
    zero = basis_state(0, dimension, r)
    if initial == "zero":
        return zero
    if initial != "plus":
        raise ValueError(f"initial must be 'plus' or 'zero', got {initial!r}")
    matrix, tol = hadamard(HADAMARD_BITS)
    return apply_unitary(zero, gate(matrix, 0, tolerance=tol))


@dataclass(frozen=True)
class TrialSpec:
    cycles: int
    mu: Union[int, None]
    coupling: Fraction
    initial: str
    policy: StabilityPolicy
    seed: int
    trial: int


def run_trial(spec: TrialSpec) -> Tuple[List[complex], List[int]]:
    """Per-cycle rho_01 (cycle 0 first) and per-cycle transition flags of one trajectory."""
    state = initial_state(spec.cycles, spec.mu, spec.initial)
    offdiag = [complex(reduced_offdiagonal(state))]
    events = [0]
    for cycle in range(1, spec.cycles + 1):
        u = controlled_rotation(0, cycle, spec.coupling)
        seed = derive_seed(spec.seed, spec.trial, cycle)
        state, event = evolve_step(state, u, spec.policy, seed, cycle, 0)
        events.append(0 if event is None else 1)
        offdiag.append(complex(reduced_offdiagonal(state)))
    return offdiag, events


@dataclass
class DecoherenceRow:
    cycle: int
    mean_offdiag: float
    ci_low: float
    ci_high: float
    ensemble_offdiag: float
    events: int


@dataclass
class DecoherenceResult:
    rows: List[DecoherenceRow] = field(default_factory=list)
    trials: int = 0
    mu: Union[int, None] = None
    coupling: str = "1/2"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "mu": self.mu,
            "coupling": self.coupling,
            "rows": [asdict(r) for r in self.rows],
        }

    def write_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(CSV_COLUMNS)
            for r in self.rows:
                writer.writerow([r.cycle, repr(r.mean_offdiag), repr(r.ci_low), repr(r.ci_high)])
        return path


def bootstrap_ci(values: np.ndarray, gen: np.random.Generator, samples: int = BOOTSTRAP_SAMPLES) -> Tuple[float, float]:
    """95% percentile bootstrap interval of the mean."""
    if values.size == 1 or np.all(values == values[0]):
        return float(values[0]), float(values[0])
    picks = gen.integers(0, values.size, size=(samples, values.size))
    means = values[picks].mean(axis=1)
    low, high = np.percentile(means, [2.5, 97.5])
    return float(low), float(high)


def decoherence_experiment(
    cycles: int = 20,
    trials: int = 2000,
    mu: int = 4,
    seed: int = 0,
    coupling: Fraction = Fraction(1, 2),
    initial: str = "plus",
    policy: StabilityPolicy = StabilityPolicy.SUPPORT_COUNT,
    exact: bool = False,
    workers: int = TRIAL_WORKERS,
) -> DecoherenceResult:
    """Trial-averaged |rho_01| per cycle, with bootstrap bands and ensemble values."""
    if cycles < 1 or trials < 1:
        raise ValueError(f"cycles and trials must be >= 1, got cycles={cycles} trials={trials}")
    coupling = Fraction(coupling)
    specs = [
        TrialSpec(cycles, None if exact else mu, coupling, initial, StabilityPolicy(policy), seed, k)
        for k in range(trials)
    ]

    if exact:
        # EXACT mode never truncates or collapses, so every trial is the same trajectory
        one = run_trial(specs[0])
        outputs = [one] * trials
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(run_trial, specs, chunksize=max(1, trials // (4 * workers))))
    else:
        outputs = [run_trial(spec) for spec in specs]

    offdiag = np.array([o[0] for o in outputs], dtype=np.complex128)  # trials x (cycles+1)
    magnitudes = np.abs(offdiag)
    ensemble = np.abs(offdiag.mean(axis=0))
    transitions = np.array([o[1] for o in outputs], dtype=int).sum(axis=0)

    gen = stream(seed, 1)
    result = DecoherenceResult(trials=trials, mu=None if exact else mu, coupling=str(coupling))
    for c in range(cycles + 1):
        low, high = bootstrap_ci(magnitudes[:, c], gen)
        result.rows.append(DecoherenceRow(
            cycle=c,
            mean_offdiag=float(magnitudes[:, c].mean()),
            ci_low=low,
            ci_high=high,
            ensemble_offdiag=float(ensemble[c]),
            events=int(transitions[c]),
        ))

    logger.info("Decoherence: mu=%s cycles=%d trials=%d, |rho01| %.4f -> %.4f",
                result.mu, cycles, trials, result.rows[0].mean_offdiag, result.rows[-1].mean_offdiag)
    return result
