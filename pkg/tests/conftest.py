import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acta.act import Act, regular_act, validate_act  # noqa: E402
from acta.monoid import build_chain_semilattice, build_named_semilattice_1oef, trivial_monoid  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


def set_act(m: int) -> Act:
    """The m-element set over the trivial monoid."""
    return validate_act(trivial_monoid(), np.arange(m).reshape(m, 1))


@pytest.fixture
def oefs():
    """(S, S_S, A) for S = {1,0,e,f} and A = {e,f,0}."""
    M = build_named_semilattice_1oef()
    A = validate_act(M, [[0, 2, 0, 2], [1, 2, 2, 1], [2, 2, 2, 2]], ["e", "f", "0"])
    return M, regular_act(M), A


@pytest.fixture
def chain3():
    M = build_chain_semilattice(3, "max")
    return M, regular_act(M)


@pytest.fixture(scope="session")
def universe():
    from acta.universe import build_universe

    return build_universe()


@pytest.fixture(scope="session")
def claim_ctx(universe):
    from acta.claims import Context

    return Context(universe)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
