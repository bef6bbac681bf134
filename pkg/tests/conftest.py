import numpy as np
import pytest

from mwgfrft import (build_graph, eigendecompose, fractional_basis, joint_basis,
                     laplacian, make_window_bank)

# (criterion name, passed) collected by tests/test_acceptance.py
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def make_basis(n, alpha, kind="path", seed=None):
    g = build_graph(kind, n, seed=seed)
    return fractional_basis(eigendecompose(laplacian(g)), alpha)


def make_joint(n1, n2, alpha, kind="path", seed=None):
    seeds = (seed, None if seed is None else seed + 1)
    return joint_basis(make_basis(n1, alpha, kind, seeds[0]),
                       make_basis(n2, alpha, kind, seeds[1]))


@pytest.fixture(scope="session")
def jb_3x4():
    return make_joint(3, 4, 0.7)


@pytest.fixture(scope="session")
def jb_4x5():
    return make_joint(4, 5, 0.7)


@pytest.fixture(scope="session")
def bank_3x4(jb_3x4):
    return make_window_bank("gauss", 2, jb_3x4)


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


def random_signal_on(jb, rng):
    return (rng.standard_normal((jb.n1, jb.n2))
            + 1j * rng.standard_normal((jb.n1, jb.n2)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}")
