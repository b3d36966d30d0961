# -*- coding: utf-8 -*-
"""Experiment orchestration - config loading, dispatch, record writing and replay."""

import json
import logging
import time
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from pydantic import ValidationError

from src.config import ENGINE_VERSION, RESULTS_PATH
from src.errors import CMQMError, ConfigInvalid
from src.runner.base import Experiment, ExperimentOutput
from src.runner.models import ExperimentConfig, ExperimentRecord, Params
from src.runner.registry import get_registry, init_experiments

logger = logging.getLogger(__name__)


def canonical_json(obj: Any) -> str:
    """Sorted-key, whitespace-free JSON; equal payloads give equal bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _read_document(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigInvalid(f"cannot read config {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigInvalid(f"config {path} is not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ConfigInvalid(f"config {path} must be a JSON object")
    return doc


def load_config(
    path: Optional[Union[str, Path]] = None,
    experiment: Optional[str] = None,
    seed: Optional[int] = None,
    output_path: Optional[str] = None,
) -> ExperimentConfig:
    """Build a config from an optional JSON document plus command-line overrides."""
    doc = _read_document(path) if path else {}
    if experiment is not None:
        if doc.get("experiment", experiment) != experiment:
            raise ConfigInvalid(f"config is for {doc['experiment']!r}, not {experiment!r}")
        doc["experiment"] = experiment
    if seed is not None:
        doc["seed"] = seed
    if output_path is not None:
        doc["output_path"] = output_path
    try:
        return ExperimentConfig.model_validate(doc)
    except ValidationError as e:
        raise ConfigInvalid(f"invalid experiment config: {e}") from e


def _experiment(config: ExperimentConfig) -> Experiment:
    registry = get_registry()
    if not registry.names():
        init_experiments()
    experiment = registry.get(config.experiment)
    if experiment is None:
        raise ConfigInvalid(f"no runner for experiment {config.experiment.value!r}")
    return experiment


def validate_params(config: ExperimentConfig) -> Tuple[Experiment, Params]:
    experiment = _experiment(config)
    try:
        params = experiment.params_model.model_validate(config.parameters)
    except ValidationError as e:
        raise ConfigInvalid(f"invalid parameters for {config.experiment.value}: {e}") from e
    return experiment, params


def echo_config(config: ExperimentConfig, params: Params) -> Dict[str, Any]:
    """The config with every parameter default spelled out."""
    echoed = config.model_dump(mode="json")
    echoed["parameters"] = params.model_dump(mode="json")
    return echoed


def execute(config: ExperimentConfig) -> Tuple[ExperimentRecord, ExperimentOutput]:
    """Run an experiment in memory; nothing is written."""
    experiment, params = validate_params(config)
    logger.info("Running %s (seed=%d)", config.experiment.value, config.seed)

    start_time = time.time()
    try:
        output = experiment.run(params, config.seed)
    except CMQMError:
        raise
    except ValueError as e:
        raise ConfigInvalid(str(e)) from e
    elapsed = time.time() - start_time

    record = ExperimentRecord(
        config=echo_config(config, params),
        engine_version=ENGINE_VERSION,
        wall_clock_seconds=round(elapsed, 6),
        # round trip through canonical text so the record holds plain JSON values only
        result=json.loads(canonical_json(output.payload)),
    )
    logger.info("Finished %s in %.2fs", config.experiment.value, elapsed)
    return record, output


def default_output_path(config: ExperimentConfig) -> Path:
    if config.output_path:
        return Path(config.output_path)
    return RESULTS_PATH / f"{config.experiment.value}-{config.seed}.json"


def write_record(record: ExperimentRecord, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(record.model_dump(mode="json"), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return path


def run(config: ExperimentConfig) -> ExperimentRecord:
    """Execute ``config`` and write its record (plus any series files) to the output path."""
    record, output = execute(config)
    path = default_output_path(config)
    for suffix, writer in output.artifacts:
        written = writer(path.with_suffix(suffix))
        record.artifacts.append(written.name)
    write_record(record, path)
    logger.info("Record written to %s", path)
    return record


def load_record(path: Union[str, Path]) -> ExperimentRecord:
    doc = _read_document(path)
    try:
        return ExperimentRecord.model_validate(doc)
    except ValidationError as e:
        raise ConfigInvalid(f"{path} is not an experiment record: {e}") from e


def replay(path: Union[str, Path]) -> Dict[str, Any]:
    """Re-run the echoed config of a record and compare result payloads byte for byte."""
    original = load_record(path)
    try:
        config = ExperimentConfig.model_validate(original.config)
    except ValidationError as e:
        raise ConfigInvalid(f"record {path} has an invalid config: {e}") from e
    fresh, _ = execute(config)
    identical = canonical_json(fresh.result) == canonical_json(original.result)
    if not identical:
        logger.warning("Replay of %s diverged from the recorded payload", path)
    return {
        "record": str(path),
        "experiment": config.experiment.value,
        "identical": identical,
        "engine_version": ENGINE_VERSION,
        "recorded_engine_version": original.engine_version,
    }
