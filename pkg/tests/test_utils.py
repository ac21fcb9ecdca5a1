import json
from datetime import datetime, timezone
from pathlib import Path

from heptagon.qubits import energies, full_spectrum
from heptagon.utils import (
    REQUIRED_MODULES,
    format_decimal,
    format_energy,
    format_spectrum_table,
    save_output,
    timestamped_path,
    validate_environment,
)


def test_timestamped_path():
    now = datetime(2026, 10, 18, 9, 30, 0, tzinfo=timezone.utc)
    assert timestamped_path("out/bundle.json", now) == "out/bundle-2026-10-18T09-30-00Z.json"


def test_save_output(tmp_path):
    target = tmp_path / "nested" / "bundle.json"
    paths = save_output('{"k": 1}', str(target), keep_timestamped=True)
    assert paths["latest"] == str(target)
    assert json.loads(target.read_text(encoding="utf-8")) == {"k": 1}
    assert Path(paths["timestamped"]).exists()


def test_save_output_failure(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    assert save_output("{}", str(blocker / "out.json")) == {}


def test_format_energy():
    assert format_energy(energies(2, 0)[1]) == "-6"
    text = format_energy(energies(2, 1)[0])
    assert "sqrt(D2^1)" in text
    assert format_decimal(1 / 3) == "0.333333333333333"


def test_spectrum_table():
    table = format_spectrum_table(full_spectrum(), numeric=True)
    lines = table.splitlines()
    assert lines[0].split() == ["k", "r'", "nu", "mult", "energy", "numeric"]
    assert len(lines) == 1 + 35 + 1
    assert lines[-1] == "total states: 128"


def test_validate_environment():
    status = validate_environment()
    assert set(status) == set(REQUIRED_MODULES)
    assert all(status.values())
