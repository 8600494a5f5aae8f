import logging

import pytest

from nodal_kstab.exceptions import EmitterError, InvalidInputError, TruncationExhaustedError
from nodal_kstab.utils import Settings, get_logger, load_settings, set_level


def test_exception_text():
    assert str(InvalidInputError("bad slope")) == "400: bad slope"
    assert str(EmitterError("no disk", path="/tmp/x")) == "500: no disk (path: /tmp/x)"
    assert TruncationExhaustedError(truncation=64).truncation == 64


def test_default_settings(monkeypatch):
    for key in ("NODAL_KSTAB_TRUNCATION_CAP", "NODAL_KSTAB_DN_MAX", "NODAL_KSTAB_IRREDUCIBILITY_MAX", "NODAL_KSTAB_JOBS", "NODAL_KSTAB_CACHE_DIR"):
        monkeypatch.delenv(key, raising=False)
    assert load_settings() == Settings()


def test_settings_precedence(monkeypatch):
    monkeypatch.setenv("NODAL_KSTAB_JOBS", "3")
    assert load_settings().jobs == 3
    assert load_settings({"NODAL_KSTAB_JOBS": 5}).jobs == 5


@pytest.mark.parametrize("config", [{"NODAL_KSTAB_JOBS": 0}, {"NODAL_KSTAB_TRUNCATION_CAP": "many"}])
def test_invalid_settings(config):
    with pytest.raises(InvalidInputError):
        load_settings(config)


def test_file_logging(tmp_path):
    logger = get_logger("nodal_kstab.test_file", {"LOG_DIR": str(tmp_path), "LOG_LEVEL": "INFO"})
    logger.info("📊 written")
    for handler in logger.handlers:
        handler.flush()
    assert "📊 written" in (tmp_path / "nodal_kstab.log").read_text(encoding="utf-8")


def test_set_level():
    logger = get_logger("nodal_kstab.test_level")
    set_level("debug")
    assert logger.level == logging.DEBUG
    set_level("WARNING")
    assert logger.level == logging.WARNING
