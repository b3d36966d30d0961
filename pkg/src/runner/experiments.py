# -*- coding: utf-8 -*-
"""Built-in experiments, one per CLI subcommand."""

import logging
from fractions import Fraction
from typing import Any, Dict

from src.chaitin.omega import omega_lower_bound
from src.chaitin.rotation import rotation_ladder, write_ladder_csv
from src.collapse.decoherence import decoherence_experiment
from src.collapse.meter import meter_demo, meter_statistics
from src.collapse.transition import evolve_cycle
from src.diophantine.decision import DecisionMode, classical_oracle, decide_solution
from src.diophantine.domain import SearchDomain
from src.diophantine.observable import apply_U_D, extended_label
from src.diophantine.polynomial import DiophantinePolynomial
from src.errors import ConfigInvalid, DimensionMismatch, TagOverflow
from src.numeric.fixedpoint import Resolution
from src.resources.estimates import compare_reference, estimate_resources, field_bounds
from src.runner.base import Experiment, ExperimentOutput
from src.runner.models import (
    ChaitinOmegaParams, ChaitinRotateParams, DecohereParams, DiagDemoParams, DioSolveParams, EstimateResourcesParams,
    ExperimentName, FieldRunParams, MeterParams, StateEvolveParams,
)
from src.state import dump
from src.state.rng import derive_seed, stream
from src.state.statevec import basis_state, uniform_superposition
from src.state.unitary import SingleTargetGate, UnitarySpec, random_circuit
from src.turing.field import TuringFieldConfig, emulate_infinite_field, field_search, halt_latency
from src.turing.four_squares import four_squares_demo
from src.turing.halting import diagonal_demo

logger = logging.getLogger(__name__)

# ── Diophantine ──

class DioSolve(Experiment):
    name = ExperimentName.DIO_SOLVE
    params_model = DioSolveParams
    summary = "Decide a Diophantine equation on {0..cutoff-1}^n"

    def run(self, params: DioSolveParams, seed: int) -> ExperimentOutput:
        D = params.parsed()
        dom = SearchDomain(D.arity, params.cutoff)
        if params.mode is DecisionMode.CLASSICAL:
            decision = classical_oracle(D, params.cutoff)
        else:
            decision = decide_solution(D, dom, params.mode.value, params.mu, params.shots, seed)

        payload: Dict[str, Any] = {"polynomial": str(D), "decision": decision.to_dict()}
        if params.mode is not DecisionMode.CLASSICAL and params.zero_tags:
            payload["tag_width"] = params.tag_width
            payload.update(_zero_tag_points(D, dom, params))
        return ExperimentOutput(payload)


def _zero_tag_points(D: DiophantinePolynomial, dom: SearchDomain, params: DioSolveParams) -> Dict[str, Any]:
    """Zero-tag components of U_D on the uniform superposition are the roots."""
    try:
        tagged = apply_U_D(uniform_superposition(dom.size, Resolution(params.mu)), D, dom, params.tag_width)
    except TagOverflow as e:
        logger.warning("Zero-tag pass skipped: %s", e)
        return {"zero_tag_points": None, "zero_tag_error": e.to_dict()}
    roots = [extended_label(j, dom)[1] for j in sorted(tagged.amplitudes) if j < dom.size]
    return {"zero_tag_points": [list(x) for x in roots]}


# ── Turing field ──

class FieldRun(Experiment):
    name = ExperimentName.FIELD_RUN
    params_model = FieldRunParams
    summary = "Search for a root with a finite Turing field T(M, V)"

    def run(self, params: FieldRunParams, seed: int) -> ExperimentOutput:
        D = params.parsed()
        cfg = TuringFieldConfig(
            machine_count=params.machine_count,
            message_rate=params.message_rate,
            steps_per_tick=params.steps_per_tick,
            tape_bound=params.tape_bound,
            tick_budget=params.tick_budget,
        )
        payload: Dict[str, Any] = {
            "polynomial": str(D),
            "halt_latency": halt_latency(cfg.machine_count, cfg.message_rate),
        }
        if params.infinite:
            payload["infinite_field"] = emulate_infinite_field(D, cfg, params.max_rounds, params.cutoff).to_dict()
        else:
            payload["field"] = field_search(D, SearchDomain(D.arity, params.cutoff), cfg).to_dict()
        return ExperimentOutput(payload)


class DiagDemo(Experiment):
    name = ExperimentName.DIAG_DEMO
    params_model = DiagDemoParams
    summary = "Budgeted diagonal table against a bounded halting decider"

    def run(self, params: DiagDemoParams, seed: int) -> ExperimentOutput:
        payload: Dict[str, Any] = {
            "diagonal": diagonal_demo(params.enum_limit, params.budget, params.tape_bound).to_dict(),
        }
        if params.four_squares_x is not None:
            run = four_squares_demo(params.four_squares_x, params.four_squares_budget)
            payload["four_squares"] = {"x": params.four_squares_x, **run.to_dict()}
        return ExperimentOutput(payload)


# ── Chaitin ──

class ChaitinOmega(Experiment):
    name = ExperimentName.CHAITIN_OMEGA
    params_model = ChaitinOmegaParams
    summary = "Certified lower bound on the halting probability"

    def run(self, params: ChaitinOmegaParams, seed: int) -> ExperimentOutput:
        return ExperimentOutput(omega_lower_bound(params.L, params.t, params.workers).to_dict())


class ChaitinRotate(Experiment):
    name = ExperimentName.CHAITIN_ROTATE
    params_model = ChaitinRotateParams
    summary = "Estimate a dyadic omega by rotation and sigma_z counting"

    def run(self, params: ChaitinRotateParams, seed: int) -> ExperimentOutput:
        omega = Fraction(params.omega)
        rungs = rotation_ladder(omega, params.mu, params.shots, seed)
        payload = {
            "omega": str(omega),
            "mu": params.mu,
            "quantization_floor": rungs[0].quantization_floor,
            "rungs": [r.to_dict() for r in rungs],
        }
        return ExperimentOutput(payload, [(".csv", lambda path: write_ladder_csv(rungs, path))])


# ── Collapse ──

class Decohere(Experiment):
    name = ExperimentName.DECOHERE
    params_model = DecohereParams
    summary = "Trial-averaged loss of coherence under environment coupling"

    def run(self, params: DecohereParams, seed: int) -> ExperimentOutput:
        result = decoherence_experiment(
            cycles=params.cycles,
            trials=params.trials,
            mu=params.mu,
            seed=seed,
            coupling=Fraction(params.coupling),
            initial=params.initial,
            policy=params.policy,
            exact=params.exact,
            workers=params.workers,
        )
        return ExperimentOutput(result.to_dict(), [(".csv", result.write_csv)])


class Meter(Experiment):
    name = ExperimentName.METER
    params_model = MeterParams
    summary = "Spin measured by a three-level meter"

    def run(self, params: MeterParams, seed: int) -> ExperimentOutput:
        first = meter_demo(derive_seed(seed, 0), params.mu, params.input_basis)
        counts = meter_statistics(params.trials, seed, params.mu, params.input_basis)
        payload = {
            "input_basis": params.input_basis,
            "mu": params.mu,
            "trials": params.trials,
            "first_outcome": {
                "label": first.label,
                "system": first.system,
                "meter": first.meter,
                "event": first.event.to_dict(),
            },
            "counts": counts,
        }
        return ExperimentOutput(payload)


def _describe(u: UnitarySpec) -> Dict[str, Any]:
    if isinstance(u, SingleTargetGate):
        return {"kind": "gate", "target": u.target, "controls": list(u.controls)}
    return {"kind": type(u).__name__.lower()}


class StateEvolve(Experiment):
    name = ExperimentName.STATE_EVOLVE
    params_model = StateEvolveParams
    summary = "Evolve/truncate/collapse cycles of a random rational circuit"

    def run(self, params: StateEvolveParams, seed: int) -> ExperimentOutput:
        dimension = 1 << params.n_qubits
        if params.initial_state is None:
            state = basis_state(0, dimension, Resolution(params.mu))
        else:
            state = dump.from_dict(params.initial_state)
            if state.dimension != dimension:
                raise DimensionMismatch(f"initial state has dimension {state.dimension}, circuit needs {dimension}")
            if state.resolution != Resolution(params.mu):
                raise ConfigInvalid(f"initial state resolution does not match mu={params.mu}")

        circuit = random_circuit(params.n_qubits, params.depth, stream(seed, 0))
        trajectory = evolve_cycle(state, circuit, params.cycles, params.policy, derive_seed(seed, 1))
        payload = {
            "circuit": [_describe(u) for u in circuit],
            "cycles": trajectory.cycles,
            "supports": trajectory.supports,
            "events": [e.to_dict() for e in trajectory.events],
            "final_state": dump.to_dict(trajectory.final_state),
        }
        return ExperimentOutput(payload, [(".jsonl", trajectory.write_jsonl)])


# ── Resources ──

class EstimateResources(Experiment):
    name = ExperimentName.ESTIMATE_RESOURCES
    params_model = EstimateResourcesParams
    summary = "Log-space memory and speed bounds of a universe-sized computer"

    def run(self, params: EstimateResourcesParams, seed: int) -> ExperimentOutput:
        estimate = estimate_resources(params.S_over_kB, params.mu, params.E_over_hbar,
                                      log2_states=params.log2_microstates)
        payload = {
            "estimate": estimate.to_dict(),
            "comparisons": compare_reference(estimate),
            "field_bounds": field_bounds(params.field_bounds_mu),
        }
        return ExperimentOutput(payload)


ALL_EXPERIMENTS = (
    DioSolve, FieldRun, DiagDemo, ChaitinOmega, ChaitinRotate, Decohere, Meter, EstimateResources, StateEvolve,
)
