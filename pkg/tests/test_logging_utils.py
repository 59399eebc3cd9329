"""Tests for setup_logging."""

import logging

import pytest

from monodec.utils.logging_utils import setup_logging


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


class TestSetupLogging:
    """Tests for the root logger configuration."""

    def test_console_only(self, monkeypatch):
        monkeypatch.delenv("MONODEC_LOG_LEVEL", raising=False)
        setup_logging()
        root = logging.getLogger()
        assert len(root.handlers) == 1
        assert root.level == logging.WARNING

    def test_env_level(self, monkeypatch):
        monkeypatch.setenv("MONODEC_LOG_LEVEL", "info")
        setup_logging()
        assert logging.getLogger().level == logging.INFO

    def test_log_file(self, tmp_path):
        log_file = tmp_path / "logs" / "monodec.log"
        setup_logging("ERROR", str(log_file))
        logging.getLogger("monodec.test").debug("written to the file only")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written to the file only" in log_file.read_text(encoding="utf-8")
        assert logging.getLogger().handlers[0].level == logging.ERROR
