import json
from pathlib import Path

import numpy as np
import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle():
    return json.loads((DATA / "oracle.json").read_text())


class CosineZ:
    """Synthetic evaluator: Z(t) = amp * cos(freq * (t - shift))."""

    def __init__(self, amp=1.0, freq=1.0, shift=0.0):
        self.amp, self.freq, self.shift = amp, freq, shift

    def z(self, t):
        return self.amp * np.cos(self.freq * (np.asarray(t, dtype=float) - self.shift))

    def zp(self, t):
        return -self.amp * self.freq * np.sin(self.freq * (np.asarray(t, dtype=float) - self.shift))


class FlatZ:
    """Z identically zero: the degenerate end of the arc-length split."""

    def z(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def zp(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))


@pytest.fixture
def cosine():
    return CosineZ


@pytest.fixture
def flat():
    return FlatZ()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import ACCEPTANCE_KEY

    lines = config.stash.get(ACCEPTANCE_KEY, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
