# -*- coding: utf-8 -*-
"""Tests for the loguru sink manager."""

import logging

from loguru import logger

from src.common.logger import get_logger, init_logger


class TestLogger:
    def test_stdlib_records_reach_the_file_sink(self, tmp_path):
        path = tmp_path / "cmqm.log"
        init_logger(log_level="INFO", log_file=str(path), enable_console=False)
        logging.getLogger("src.collapse.transition").info("collapsed to %d", 5)
        logging.getLogger("src.collapse.transition").debug("hidden")
        logger.remove()
        text = path.read_text()
        assert "collapsed to 5" in text
        assert "hidden" not in text

    def test_run_log_keeps_only_its_run(self, tmp_path):
        path = tmp_path / "run.log"
        manager = init_logger(log_level="DEBUG", enable_console=False)
        manager.add_run_log_file("meter-1", str(path))
        get_logger("meter-1").info("mine")
        get_logger("meter-2").info("other run")
        get_logger().info("unbound")
        logger.remove()
        text = path.read_text()
        assert "mine" in text
        assert "other run" not in text and "unbound" not in text

    def test_set_level_rebuilds_sinks(self, tmp_path):
        path = tmp_path / "level.log"
        manager = init_logger(log_level="ERROR", log_file=str(path), enable_console=False)
        get_logger().warning("dropped")
        manager.set_level("warning")
        get_logger().warning("kept")
        logger.remove()
        assert manager.log_level == "WARNING"
        text = path.read_text()
        assert "kept" in text and "dropped" not in text

    def test_run_context_tags_library_records(self, tmp_path):
        path = tmp_path / "run.log"
        manager = init_logger(log_level="INFO", enable_console=False)
        manager.add_run_log_file("decohere-3", str(path))
        with manager.run_context("decohere-3"):
            logging.getLogger("src.collapse.decoherence").info("cycle %d done", 1)
        logging.getLogger("src.collapse.decoherence").info("after the run")
        logger.remove()
        text = path.read_text()
        assert "cycle 1 done" in text
        assert "after the run" not in text
