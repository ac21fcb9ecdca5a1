import logging

import pytest
from pydantic import ValidationError

from heptagon.settings import (
    CONFIG_FILE_ENV,
    HeptagonSettings,
    configure_logging,
    get_settings,
    reset_settings,
)


def test_defaults():
    settings = get_settings()
    assert settings.oracle_tol == 1e-12
    assert settings.random_seed == 7
    assert settings.log_level == "WARNING"
    assert get_settings() is settings


def test_environment_override(monkeypatch):
    monkeypatch.setenv("HEPTAGON_RANDOM_TRIALS", "3")
    assert get_settings().random_trials == 3


def test_yaml_file(monkeypatch, tmp_path):
    path = tmp_path / "heptagon.yaml"
    path.write_text("random_trials: 5\ncompare_tol: 1.0e-8\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_FILE_ENV, str(path))
    settings = get_settings()
    assert settings.random_trials == 5
    assert settings.compare_tol == 1e-8


def test_environment_beats_yaml(monkeypatch, tmp_path):
    path = tmp_path / "heptagon.yaml"
    path.write_text("random_trials: 5\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_FILE_ENV, str(path))
    monkeypatch.setenv("HEPTAGON_RANDOM_TRIALS", "9")
    assert get_settings().random_trials == 9


def test_dotenv_file(monkeypatch, tmp_path):
    (tmp_path / ".env").write_text("HEPTAGON_RANDOM_SEED=11\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("HEPTAGON_RANDOM_SEED", raising=False)
    assert get_settings().random_seed == 11


def test_yaml_must_be_a_mapping(monkeypatch, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_FILE_ENV, str(path))
    with pytest.raises(ValueError):
        get_settings()


def test_missing_yaml_file(monkeypatch, tmp_path):
    monkeypatch.setenv(CONFIG_FILE_ENV, str(tmp_path / "missing.yaml"))
    with pytest.raises(FileNotFoundError):
        get_settings()


def test_dotenv_beats_yaml(monkeypatch, tmp_path):
    path = tmp_path / "heptagon.yaml"
    path.write_text("random_seed: 5\nrandom_trials: 4\n", encoding="utf-8")
    (tmp_path / ".env").write_text("HEPTAGON_RANDOM_SEED=11\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(CONFIG_FILE_ENV, str(path))
    settings = get_settings()
    assert settings.random_seed == 11
    assert settings.random_trials == 4


def test_validation():
    with pytest.raises(ValidationError):
        HeptagonSettings(log_level="loud")
    with pytest.raises(ValidationError):
        HeptagonSettings(oracle_tol=0)
    assert HeptagonSettings(log_level="debug").log_level == "DEBUG"


def test_configure_logging():
    configure_logging("info")
    assert logging.getLogger().level == logging.INFO
    reset_settings()
    configure_logging()
    assert logging.getLogger().level == logging.WARNING
