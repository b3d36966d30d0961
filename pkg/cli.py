#!/usr/bin/env python
"""
CMQM experiment runner - command-line tool

One experiment per invocation:

    python cli.py dio-solve --config dio.json --seed 7 --out results/dio.json
    python cli.py estimate-resources -p mu=1e23
    python cli.py replay results/dio.json
    python cli.py experiments

Records are written as JSON; series experiments add CSV / JSON-lines files
next to the record. Failures write nothing and print a JSON error object to
stderr, exiting with the error's code (see ``experiments``).
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.common.logger import get_logger, init_logger
from src.config import LOG_FILE, LOG_LEVEL
from src.errors import CMQMError, ConfigInvalid, exit_code_table
from src.runner.engine import default_output_path, load_config, replay, run
from src.runner.models import ExperimentName
from src.runner.registry import get_registry, init_experiments

console = Console()


def _parse_overrides(pairs: List[str]) -> Dict[str, Any]:
    """KEY=VALUE pairs; VALUE is read as JSON, falling back to a plain string."""
    out: Dict[str, Any] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ConfigInvalid(f"parameter override must look like KEY=VALUE, got {pair!r}")
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError:
            out[key] = raw
    return out


def _fail(err: CMQMError) -> int:
    sys.stderr.write(json.dumps(err.to_dict(), sort_keys=True) + "\n")
    return err.exit_code


def run_experiment(args) -> int:
    """Run one experiment and write its record."""
    config = load_config(args.config, args.command, args.seed, args.out)
    if args.param:
        config.parameters.update(_parse_overrides(args.param))

    run_id = f"{config.experiment.value}-{config.seed}"
    log = get_logger(run_id)
    if args.run_log:
        args.log_manager.add_run_log_file(run_id, args.run_log)

    with args.log_manager.run_context(run_id):
        record = run(config)
    path = default_output_path(config)
    log.info("Run {} recorded at {}", run_id, path)

    lines = [
        f"[cyan]experiment:[/cyan] {config.experiment.value}",
        f"[cyan]seed:[/cyan] {config.seed}",
        f"[cyan]record:[/cyan] {path}",
        f"[cyan]wall clock:[/cyan] {record.wall_clock_seconds:.3f}s",
    ]
    if record.artifacts:
        lines.append(f"[cyan]series:[/cyan] {', '.join(record.artifacts)}")
    console.print(Panel("\n".join(lines), title="[green]✓[/green] done", border_style="green"))
    return 0


def replay_record(args) -> int:
    report = replay(args.record)
    console.print_json(json.dumps(report, sort_keys=True))
    return 0 if report["identical"] else 1


def list_experiments(args) -> int:
    """Print the experiment list and the exit-code table."""
    registry = get_registry()
    if not registry.names():
        init_experiments()

    table = Table(title="Experiments")
    table.add_column("name", style="cyan")
    table.add_column("description", style="magenta")
    for experiment in registry.experiments():
        table.add_row(experiment.name.value, experiment.summary)
    console.print(table)

    codes = Table(title="Exit codes")
    codes.add_column("code", style="yellow")
    codes.add_column("error", style="green")
    for name, code in sorted(exit_code_table().items(), key=lambda kv: kv[1]):
        codes.add_row(str(code), name)
    console.print(codes)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="CMQM simulator - experiment runner",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default=None, help=f"log level (default {LOG_LEVEL})")

    subparsers = parser.add_subparsers(dest="command", help="available commands")

    for name in ExperimentName:
        sub = subparsers.add_parser(name.value, parents=[common], help=f"run the {name.value} experiment")
        sub.add_argument("--config", help="JSON config document")
        sub.add_argument("--seed", type=int, default=None, help="seed override")
        sub.add_argument("--out", default=None, help="record path override")
        sub.add_argument("-p", "--param", action="append", default=[], metavar="KEY=VALUE",
                         help="parameter override (VALUE parsed as JSON)")
        sub.add_argument("--run-log", default=None, help="also write this run's log records to a file")
        sub.set_defaults(handler=run_experiment)

    replay_parser = subparsers.add_parser("replay", parents=[common], help="re-run a record and compare payloads")
    replay_parser.add_argument("record", help="record JSON path")
    replay_parser.set_defaults(handler=replay_record)

    list_parser = subparsers.add_parser("experiments", parents=[common], help="list experiments and exit codes")
    list_parser.set_defaults(handler=list_experiments)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 0

    args.log_manager = init_logger(log_level=args.log_level or LOG_LEVEL, log_file=LOG_FILE)
    try:
        return args.handler(args)
    except CMQMError as e:
        get_logger().error("{} failed: {}", args.command, e)
        return _fail(e)
    except Exception as e:
        get_logger().exception("{} crashed", args.command)
        return _fail(CMQMError(f"{type(e).__name__}: {e}"))


if __name__ == "__main__":
    sys.exit(main())
