import numpy as np
import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


def random_points(d, m, seed=0, scale=1.0):
    """Random points on the zero-sum hyperplane."""
    rng = np.random.default_rng(seed)
    t = rng.uniform(-scale, scale, size=(m, d + 1))
    return t - t.mean(axis=1, keepdims=True)


def simplex_points(d, m, seed=0):
    """Random points inside the fundamental simplex."""
    rng = np.random.default_rng(seed)
    s = rng.dirichlet(np.ones(d + 1), size=m)
    # vertices v^k/(d+1) for k = 0..d, with v^0 = 0
    verts = np.zeros((d + 1, d + 1))
    for k in range(1, d + 1):
        verts[k, :k] = (d + 1 - k) / (d + 1)
        verts[k, k:] = -k / (d + 1)
    return s @ verts


@pytest.fixture
def acceptance():
    """Record a one-line verdict for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE_LINES[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
