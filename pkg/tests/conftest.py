import os
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from heptagon.fields import CycNum, RhoNum  # noqa: E402
from heptagon.settings import get_settings, reset_settings  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings, without any YAML or env overrides."""
    for name in list(os.environ):
        if name.startswith("HEPTAGON_"):
            monkeypatch.delenv(name)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    return random.Random(get_settings().random_seed)


@pytest.fixture
def trials():
    return get_settings().random_trials


def _rat(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


@pytest.fixture
def random_rho(rng):
    """Draw random nonzero elements of Q(rho)."""
    def draw():
        while True:
            x = RhoNum(tuple(_rat(rng) for _ in range(3)))
            if not x.is_zero():
                return x
    return draw


@pytest.fixture
def random_cyc(rng):
    def draw():
        while True:
            x = CycNum(tuple(_rat(rng) for _ in range(6)))
            if not x.is_zero():
                return x
    return draw
