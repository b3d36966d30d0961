# -*- coding: utf-8 -*-
"""Pydantic schemas for experiment configs, parameters and records."""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.collapse.stability import StabilityPolicy
from src.config import DEFAULT_MU, MAX_MU, MAX_PREFIX_FREE_L, TAG_WIDTH, TRIAL_WORKERS
from src.diophantine.decision import DecisionMode
from src.diophantine.polynomial import DiophantinePolynomial, parse_polynomial
from src.turing.machine import DEFAULT_TAPE_BOUND

SEED_LIMIT = 1 << 64

PolynomialSpec = Union[str, Dict[str, Any]]
BigNumber = Union[int, float, str]


class ExperimentName(str, Enum):
    DIO_SOLVE = "dio-solve"
    FIELD_RUN = "field-run"
    DIAG_DEMO = "diag-demo"
    CHAITIN_OMEGA = "chaitin-omega"
    CHAITIN_ROTATE = "chaitin-rotate"
    DECOHERE = "decohere"
    METER = "meter"
    ESTIMATE_RESOURCES = "estimate-resources"
    STATE_EVOLVE = "state-evolve"


def polynomial_from_spec(spec: PolynomialSpec) -> DiophantinePolynomial:
    if isinstance(spec, str):
        return parse_polynomial(spec)
    return DiophantinePolynomial.from_dict(spec)


def _check_mu(mu: int) -> int:
    if mu < 2 or mu % 2 or mu > MAX_MU:
        raise ValueError(f"mu must be even and in [2, {MAX_MU}], got {mu}")
    return mu


def _check_fraction(text: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e
    return text


class Params(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ResolutionParams(Params):
    mu: int = DEFAULT_MU

    @field_validator("mu")
    @classmethod
    def _even_mu(cls, v: int) -> int:
        return _check_mu(v)


# ── Diophantine and Turing field ──

class PolynomialParams(Params):
    polynomial: PolynomialSpec = Field(..., description="Text form or {'arity', 'terms'} document")

    @field_validator("polynomial")
    @classmethod
    def _parses(cls, v):
        try:
            polynomial_from_spec(v)
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed polynomial document: {e}") from e
        return v

    def parsed(self) -> DiophantinePolynomial:
        return polynomial_from_spec(self.polynomial)


class DioSolveParams(PolynomialParams, ResolutionParams):
    cutoff: int = Field(default=10, ge=1)
    mode: DecisionMode = DecisionMode.DETERMINISTIC
    shots: int = Field(default=64, ge=1)
    tag_width: int = Field(default=TAG_WIDTH, ge=1)
    zero_tags: bool = True


class FieldRunParams(PolynomialParams):
    cutoff: int = Field(default=10, ge=1)
    machine_count: int = Field(default=4, ge=1)
    message_rate: int = Field(default=1, ge=1)
    steps_per_tick: int = Field(default=1, ge=1)
    tape_bound: int = Field(default=4096, ge=1)
    tick_budget: int = Field(default=1_000_000, ge=1)
    infinite: bool = False
    max_rounds: int = Field(default=8, ge=1, le=24)


# ── Halting ──

class DiagDemoParams(Params):
    enum_limit: int = Field(default=50, ge=1)
    budget: int = Field(default=10_000, ge=1)
    tape_bound: int = Field(default=DEFAULT_TAPE_BOUND, ge=1)
    four_squares_x: Optional[int] = Field(default=None, ge=1)
    four_squares_budget: int = Field(default=1_000_000, ge=1)


# ── Chaitin ──

class ChaitinOmegaParams(Params):
    L: int = Field(default=14, ge=1, le=MAX_PREFIX_FREE_L)
    t: int = Field(default=1000, ge=1)
    workers: int = Field(default=TRIAL_WORKERS, ge=1)


class ChaitinRotateParams(ResolutionParams):
    omega: str = "1/2"
    shots: List[int] = Field(default_factory=lambda: [1000, 2000, 4000, 8000, 16000])

    @field_validator("omega")
    @classmethod
    def _dyadic(cls, v: str) -> str:
        value = Fraction(_check_fraction(v))
        if not 0 <= value < 1:
            raise ValueError(f"omega must lie in [0, 1), got {v}")
        if value.denominator & (value.denominator - 1):
            raise ValueError(f"omega must be dyadic, got {v}")
        return v

    @field_validator("shots")
    @classmethod
    def _positive(cls, v: List[int]) -> List[int]:
        if not v or any(s < 1 for s in v):
            raise ValueError("shots must be a non-empty list of positive counts")
        return v


# ── Collapse ──

class DecohereParams(ResolutionParams):
    cycles: int = Field(default=20, ge=1, le=24)
    trials: int = Field(default=2000, ge=1)
    mu: int = 4
    coupling: str = "1/2"
    initial: str = Field(default="plus", pattern="^(plus|zero)$")
    policy: StabilityPolicy = StabilityPolicy.SUPPORT_COUNT
    exact: bool = False
    workers: int = Field(default=TRIAL_WORKERS, ge=1)

    @field_validator("coupling")
    @classmethod
    def _rational(cls, v: str) -> str:
        return _check_fraction(v)


class MeterParams(ResolutionParams):
    input_basis: str = Field(default="x", pattern="^[xz]$")
    trials: int = Field(default=1, ge=1)


class StateEvolveParams(ResolutionParams):
    n_qubits: int = Field(default=3, ge=1, le=16)
    depth: int = Field(default=4, ge=1)
    cycles: int = Field(default=10, ge=1)
    mu: int = 4
    policy: StabilityPolicy = StabilityPolicy.SUPPORT_COUNT
    initial_state: Optional[Dict[str, Any]] = Field(default=None, description="State dump document")


# ── Resources ──

class EstimateResourcesParams(Params):
    S_over_kB: Optional[BigNumber] = None
    log2_microstates: Optional[BigNumber] = None
    mu: BigNumber = "1e23"
    E_over_hbar: BigNumber = 1
    field_bounds_mu: BigNumber = "1e120"

    @model_validator(mode="after")
    def _one_entropy_form(self):
        if self.S_over_kB is None and self.log2_microstates is None:
            self.log2_microstates = "1e23"
        elif self.S_over_kB is not None and self.log2_microstates is not None:
            raise ValueError("give exactly one of S_over_kB and log2_microstates")
        return self


PARAMS_BY_EXPERIMENT = {
    ExperimentName.DIO_SOLVE: DioSolveParams,
    ExperimentName.FIELD_RUN: FieldRunParams,
    ExperimentName.DIAG_DEMO: DiagDemoParams,
    ExperimentName.CHAITIN_OMEGA: ChaitinOmegaParams,
    ExperimentName.CHAITIN_ROTATE: ChaitinRotateParams,
    ExperimentName.DECOHERE: DecohereParams,
    ExperimentName.METER: MeterParams,
    ExperimentName.ESTIMATE_RESOURCES: EstimateResourcesParams,
    ExperimentName.STATE_EVOLVE: StateEvolveParams,
}


# ── Run documents ──

class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    experiment: ExperimentName
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int = Field(default=0, ge=0, lt=SEED_LIMIT)
    output_path: Optional[str] = None


class ExperimentRecord(BaseModel):
    config: Dict[str, Any]
    engine_version: str
    wall_clock_seconds: float
    result: Dict[str, Any]
    artifacts: List[str] = []
