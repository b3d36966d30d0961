# -*- coding: utf-8 -*-
"""
Sparse state vectors over the mu-bit amplitude grid.

Unitaries act on exact amplitudes and produce a PendingState; committing a
pending state runs the resolution pass (truncate, renormalize, quantize) and
yields an immutable StateVector. A StateVector whose resolution is None is in
EXACT mode: amplitudes stay ExactComplex and commits never truncate.
"""

import logging
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import isqrt, lcm
from typing import Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from src.errors import DimensionMismatch, ResolutionExceeded, TotalExtinction
from src.numeric.exact import ExactComplex, ONE, ZERO, inv_sqrt_fraction
from src.numeric.fixedpoint import FixedComplex, Resolution, below_resolution, quantize
from src.state.rng import SeedLike, as_generator, randbelow
from src.state.unitary import UnitarySpec

logger = logging.getLogger(__name__)

Amplitude = Union[FixedComplex, ExactComplex]


def _integer_weights(values: List[Fraction]) -> List[int]:
    """Scale exact Born weights to integers with the same ratios."""
    common = 1
    for v in values:
        common = lcm(common, v.denominator)
    return [int(v * common) for v in values]


def _sample_index(indices: List[int], weights: List[int], gen: np.random.Generator) -> int:
    cumulative = list(accumulate(weights))
    draw = randbelow(gen, cumulative[-1])
    return indices[bisect_right(cumulative, draw)]


def _check_index(j: int, dimension: int) -> None:
    if not 0 <= j < dimension:
        raise DimensionMismatch(f"basis index {j} outside [0, {dimension})")


class PendingState:
    """Exact, uncommitted result of a unitary (or of preparation) before the resolution pass."""

    def __init__(self, dimension: int, amplitudes: Mapping[int, ExactComplex], resolution: Optional[Resolution]):
        self.dimension = dimension
        self.amplitudes: Dict[int, ExactComplex] = {j: a for j, a in amplitudes.items() if not a.is_zero()}
        self.resolution = resolution
        for j in self.amplitudes:
            _check_index(j, dimension)

    @property
    def support(self) -> int:
        return len(self.amplitudes)

    def norm_sq(self) -> Fraction:
        return sum((a.magnitude_sq() for a in self.amplitudes.values()), Fraction(0))

    def born_weights(self) -> Tuple[List[int], List[int]]:
        indices = sorted(self.amplitudes)
        return indices, _integer_weights([self.amplitudes[j].magnitude_sq() for j in indices])

    def truncated_weight(self) -> Fraction:
        """Share of Born weight the resolution pass would zero (0 in EXACT mode)."""
        if self.resolution is None:
            return Fraction(0)
        dropped = sum(
            (a.magnitude_sq() for a in self.amplitudes.values() if below_resolution(a, self.resolution)),
            Fraction(0),
        )
        return dropped / self.norm_sq()

    def commit(self) -> Tuple["StateVector", Fraction]:
        if self.resolution is None:
            return StateVector(self.dimension, self.amplitudes, None), Fraction(0)
        return resolution_pass(self, self.resolution)


class StateVector:
    """Immutable sparse superposition; no stored amplitude is zero."""

    def __init__(self, dimension: int, amplitudes: Mapping[int, Amplitude], resolution: Optional[Resolution]):
        if dimension < 1:
            raise ValueError(f"dimension must be positive, got {dimension}")
        expected = ExactComplex if resolution is None else FixedComplex
        stored: Dict[int, Amplitude] = {}
        for j, a in amplitudes.items():
            _check_index(j, dimension)
            if not isinstance(a, expected):
                raise TypeError(f"amplitude at {j} is {type(a).__name__}, expected {expected.__name__}")
            if isinstance(a, FixedComplex) and a.resolution != resolution:
                raise ValueError(f"amplitude at {j} carries mu={a.resolution.mu}, state has mu={resolution.mu}")
            if a.is_zero():
                raise ValueError(f"zero amplitude stored at index {j}")
            stored[j] = a
        if not stored:
            raise ValueError("a state needs at least one nonzero amplitude")
        self._dimension = dimension
        self._amplitudes = stored
        self._resolution = resolution
        self._weights: Optional[Tuple[List[int], List[int]]] = None

    # ── Accessors ──

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def resolution(self) -> Optional[Resolution]:
        return self._resolution

    @property
    def is_exact(self) -> bool:
        return self._resolution is None

    @property
    def amplitudes(self) -> Dict[int, Amplitude]:
        return dict(self._amplitudes)

    @property
    def support(self) -> int:
        return len(self._amplitudes)

    def amplitude(self, j: int) -> ExactComplex:
        a = self._amplitudes.get(j)
        if a is None:
            return ZERO
        return a if self.is_exact else a.to_exact()

    def exact_amplitudes(self) -> Dict[int, ExactComplex]:
        if self.is_exact:
            return dict(self._amplitudes)
        return {j: a.to_exact() for j, a in self._amplitudes.items()}

    def norm_sq(self) -> Fraction:
        if self.is_exact:
            return sum((a.magnitude_sq() for a in self._amplitudes.values()), Fraction(0))
        units = sum(a.units_sq() for a in self._amplitudes.values())
        return Fraction(units, 1 << self._resolution.mu)

    def born_weights(self) -> Tuple[List[int], List[int]]:
        """Ascending indices and integer weights proportional to |amplitude|^2."""
        if self._weights is None:
            indices = sorted(self._amplitudes)
            if self.is_exact:
                weights = _integer_weights([self._amplitudes[j].magnitude_sq() for j in indices])
            else:
                weights = [self._amplitudes[j].units_sq() for j in indices]
            self._weights = (indices, weights)
        return self._weights

    def probabilities(self) -> Dict[int, Fraction]:
        """Exact Born probabilities |amplitude|^2 / norm^2."""
        indices, weights = self.born_weights()
        total = sum(weights)
        return {j: Fraction(w, total) for j, w in zip(indices, weights)}

    def pending(self) -> PendingState:
        return PendingState(self._dimension, self.exact_amplitudes(), self._resolution)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return (
            self._dimension == other._dimension
            and self._resolution == other._resolution
            and self._amplitudes == other._amplitudes
        )

    def __hash__(self):
        return hash((self._dimension, self._resolution, frozenset(self._amplitudes.items())))

    def __repr__(self) -> str:
        mode = "EXACT" if self.is_exact else f"mu={self._resolution.mu}"
        return f"StateVector({mode}, dimension={self._dimension}, support={self.support})"


@dataclass(frozen=True)
class DiagonalObservable:
    """Observable diagonal in the computational basis."""

    eigenvalues: Mapping[int, Fraction]

    def eigenvalue(self, j: int) -> Fraction:
        try:
            return self.eigenvalues[j]
        except KeyError:
            raise DimensionMismatch(f"observable is undefined at basis index {j}") from None


# ── Resolution pass ──

def resolution_pass(pending: PendingState, r: Resolution) -> Tuple[StateVector, Fraction]:
    """Zero sub-threshold amplitudes, renormalize survivors, quantize.

    Returns the committed state and the Born weight removed by truncation.
    """
    total = pending.norm_sq()
    if total == 0:
        raise TotalExtinction("cannot commit an all-zero state")

    # uniform and near-uniform states repeat amplitude values; work per distinct value
    survives: Dict[ExactComplex, bool] = {}
    kept: Dict[int, ExactComplex] = {}
    dropped = Fraction(0)
    for j, a in pending.amplitudes.items():
        ok = survives.get(a)
        if ok is None:
            ok = survives[a] = not below_resolution(a, r)
        if ok:
            kept[j] = a
        else:
            dropped += a.magnitude_sq()

    if not kept:
        raise TotalExtinction(f"all {pending.support} amplitudes fell below 2^-{r.half_bits}")

    kept_norm = total - dropped
    factor = Fraction(1) if kept_norm == 1 else inv_sqrt_fraction(kept_norm, r.working_bits)

    committed: Dict[ExactComplex, FixedComplex] = {}
    stored: Dict[int, FixedComplex] = {}
    for j, a in kept.items():
        q = committed.get(a)
        if q is None:
            q = committed[a] = quantize(a * factor, r)
        if not q.is_zero():
            stored[j] = q
    if not stored:
        raise TotalExtinction("every surviving amplitude quantized to zero")

    lost = dropped / total
    if lost:
        logger.debug("Resolution pass at mu=%d dropped %d amplitudes (weight %s)",
                     r.mu, pending.support - len(kept), lost)
    return StateVector(pending.dimension, stored, r), lost


# ── Preparation ──

def basis_state(index: int, dimension: int, r: Optional[Resolution]) -> StateVector:
    _check_index(index, dimension)
    if r is None:
        return StateVector(dimension, {index: ONE}, None)
    return StateVector(dimension, {index: FixedComplex(r.scale, 0, r)}, r)


def from_amplitudes(amplitudes: Mapping[int, ExactComplex], dimension: int,
                    r: Optional[Resolution]) -> StateVector:
    """Commit arbitrary exact amplitudes (normalized or not) as a state."""
    state, _ = PendingState(dimension, amplitudes, r).commit()
    return state


def uniform_superposition(n_states: int, r: Optional[Resolution], dimension: Optional[int] = None) -> StateVector:
    """Equal amplitudes on indices 0..n_states-1; needs n_states <= 2^mu."""
    if n_states < 1:
        raise ValueError(f"n_states must be positive, got {n_states}")
    dimension = dimension or n_states
    if n_states > dimension:
        raise DimensionMismatch(f"{n_states} states do not fit dimension {dimension}")

    if r is None:
        root = isqrt(n_states)
        if root * root != n_states:
            raise ValueError(f"EXACT mode needs a perfect-square state count, got {n_states}")
        amp = ExactComplex(Fraction(1, root))
    else:
        if n_states > r.coherence_bound:
            raise ResolutionExceeded(
                f"uniform superposition over {n_states} states exceeds 2^{r.mu} = {r.coherence_bound}"
            )
        amp = ExactComplex(inv_sqrt_fraction(Fraction(n_states), r.working_bits))

    state, _ = PendingState(dimension, {j: amp for j in range(n_states)}, r).commit()
    return state


# ── Evolution ──

def apply_unitary_exact(s: StateVector, u: UnitarySpec) -> PendingState:
    """U·s in exact arithmetic, not yet committed."""
    u.check_dimension(s.dimension)
    return PendingState(s.dimension, u.apply(s.exact_amplitudes(), s.dimension), s.resolution)


def apply_unitary(s: StateVector, u: UnitarySpec) -> StateVector:
    state, _ = apply_unitary_exact(s, u).commit()
    return state


def inner_product(a: StateVector, b: StateVector) -> ExactComplex:
    """<a|b> over exact amplitude values."""
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"inner product of dimensions {a.dimension} and {b.dimension}")
    left = a.exact_amplitudes()
    acc = ZERO
    for j, bj in b.exact_amplitudes().items():
        aj = left.get(j)
        if aj is not None:
            acc = acc + aj.conj() * bj
    return acc


# ── Measurement ──

def born_sample(s: Union[StateVector, PendingState], seed: SeedLike) -> int:
    """Basis index j with probability |amplitude_j|^2 / norm^2."""
    indices, weights = s.born_weights()
    if len(indices) == 1:
        return indices[0]
    return _sample_index(indices, weights, as_generator(seed))


def sample_counts(s: StateVector, shots: int, seed: SeedLike) -> Dict[int, int]:
    """Outcome histogram of ``shots`` independent Born samples, drawn as one multinomial."""
    if shots < 0:
        raise ValueError(f"shots must be non-negative, got {shots}")
    indices, weights = s.born_weights()
    total = sum(weights)
    pvals = np.array([w / total for w in weights], dtype=np.float64)
    counts = as_generator(seed).multinomial(shots, pvals)
    return {j: int(c) for j, c in zip(indices, counts) if c}


def measure_observable(s: StateVector, o: DiagonalObservable, seed: SeedLike) -> Tuple[Fraction, StateVector]:
    """Born-sample an index, return its eigenvalue and the collapsed basis state."""
    j = born_sample(s, seed)
    return o.eigenvalue(j), basis_state(j, s.dimension, s.resolution)
