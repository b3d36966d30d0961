# -*- coding: utf-8 -*-
"""
Logging setup.

Library modules log through the standard ``logging`` module; this manager
routes those records into loguru sinks (colorized stderr plus an optional
rotating file) and lets a run bind its id so per-run log files can be split
out.

Levels, low to high: DEBUG < INFO < WARNING < ERROR < CRITICAL.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

_CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

_FILE_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss.SSS} | "
    "{level: <8} | "
    "{name}:{function}:{line} | "
    "{message}"
)


class InterceptHandler(logging.Handler):
    """Forward stdlib logging records to loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


class RunContextFilter:
    """Keep only records bound to a given run id (None keeps everything)."""

    def __init__(self, run_id: Optional[str] = None):
        self.run_id = run_id

    def __call__(self, record) -> bool:
        if self.run_id is None:
            return True
        return record["extra"].get("run_id") == self.run_id


class Logger:
    """Log sink manager."""

    def __init__(
        self,
        log_level: str = "INFO",
        log_file: Optional[str] = None,
        rotation: str = "10 MB",
        retention: str = "30 days",
        enable_console: bool = True,
    ):
        """
        Args:
            log_level: DEBUG/INFO/WARNING/ERROR/CRITICAL
            log_file: optional path of a rotating log file
            rotation: rotation rule, e.g. "10 MB" or "1 day"
            retention: how long rotated files are kept
            enable_console: emit to stderr
        """
        self.log_level = log_level.upper()
        self.log_file = log_file
        self.rotation = rotation
        self.retention = retention
        self.enable_console = enable_console

        logger.remove()

        if enable_console:
            logger.add(sys.stderr, level=self.log_level, format=_CONSOLE_FORMAT, colorize=True)

        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            logger.add(
                log_file,
                level=self.log_level,
                format=_FILE_FORMAT,
                rotation=rotation,
                retention=retention,
                encoding="utf-8",
            )

        logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
        logger.debug("Logging initialised at level {}", self.log_level)

    def get_logger(self, run_id: Optional[str] = None):
        if run_id:
            return logger.bind(run_id=run_id)
        return logger

    def add_run_log_file(self, run_id: str, log_file: str) -> None:
        """Write the records of one run to their own file."""
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            level=self.log_level,
            format=_FILE_FORMAT,
            filter=RunContextFilter(run_id),
            rotation=self.rotation,
            retention=self.retention,
            encoding="utf-8",
        )

    def run_context(self, run_id: str):
        """Bind ``run_id`` to every record emitted inside the block, stdlib ones included."""
        return logger.contextualize(run_id=run_id)

    def set_level(self, level: str) -> None:
        self.__init__(
            log_level=level,
            log_file=self.log_file,
            rotation=self.rotation,
            retention=self.retention,
            enable_console=self.enable_console,
        )


_logger_instance: Optional[Logger] = None


def init_logger(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    rotation: str = "10 MB",
    retention: str = "30 days",
    enable_console: bool = True,
) -> Logger:
    """Install the global sinks (called once by the CLI)."""
    global _logger_instance

    _logger_instance = Logger(
        log_level=log_level,
        log_file=log_file,
        rotation=rotation,
        retention=retention,
        enable_console=enable_console,
    )
    return _logger_instance


def get_logger(run_id: Optional[str] = None):
    """Return the loguru logger, bound to ``run_id`` when given."""
    global _logger_instance

    if _logger_instance is None:
        _logger_instance = Logger()
    return _logger_instance.get_logger(run_id)
