import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from acta import kernels
from acta.universe import enumerate_acts, enumerate_monoids

needs_numba = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
BACKENDS = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]


@st.composite
def square_tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return draw(arrays(np.int64, (n, n), elements=st.integers(0, n - 1)))


@st.composite
def action_tables(draw, max_m=5, max_n=3):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    return draw(arrays(np.int64, (m, n), elements=st.integers(0, m - 1)))


@needs_numba
@settings(max_examples=200, deadline=None)
@given(square_tables())
def test_assoc_witness_backends_agree(t):
    a = kernels.assoc_witness(t, backend="numba")
    b = kernels.assoc_witness(t, backend="numpy")
    assert a == b
    assert (a is None) == oracles.is_associative(t.tolist())


@needs_numba
@settings(max_examples=200, deadline=None)
@given(action_tables())
def test_close_partition_backends_agree(action):
    m = action.shape[0]
    labels = np.arange(m)
    if m > 1:
        labels[m - 1] = 0
    a = kernels.close_partition(action, labels, backend="numba")
    b = kernels.close_partition(action, labels, backend="numpy")
    assert np.array_equal(a, b)


@pytest.mark.parametrize("backend", BACKENDS)
def test_close_partition_is_least_congruence(backend):
    for M in enumerate_monoids(2):
        for A in enumerate_acts(M, 4):
            act = A.action.tolist()
            if A.size >= 2:
                got = tuple(int(x) for x in kernels.close_partition(A.action, np.array([0, 0] + list(range(2, A.size))), backend=backend))
                assert got == oracles.principal(act, 0, 1)


@pytest.mark.parametrize("backend", BACKENDS)
def test_hom_search_matches_oracle(backend):
    M = enumerate_monoids(3)[5]
    acts = enumerate_acts(M, 3)
    for A in acts:
        for B in acts:
            got = kernels.hom_search(A.action, B.action, A.generators, backend=backend, capacity=2)
            got = sorted(tuple(int(x) for x in row) for row in got)
            assert got == oracles.homs(A.action.tolist(), B.action.tolist())


@pytest.mark.parametrize("backend", BACKENDS)
def test_unseparated_matches_kernels(backend):
    M = enumerate_monoids(2)[1]
    acts = enumerate_acts(M, 4)
    for A in acts:
        for C in acts:
            unsep = np.triu(np.ones((A.size, A.size), dtype=np.bool_), 1)
            kernels.unseparated(A.action, C.action, A.generators, unsep, backend=backend)
            homs = oracles.homs(A.action.tolist(), C.action.tolist())
            for a in range(A.size):
                for b in range(a + 1, A.size):
                    assert unsep[a, b] == all(h[a] == h[b] for h in homs)


@needs_numba
def test_canonical_and_enumeration_backends_agree():
    perms = kernels.permutations(3)
    for M in enumerate_monoids(3):
        if M.size == 3:
            x = kernels.canonical_monoid(M.table, perms, backend="numba")
            y = kernels.canonical_monoid(M.table, perms, backend="numpy")
            assert np.array_equal(x[0], y[0]) and x[1] == y[1]
        for A in enumerate_acts(M, 3):
            p = kernels.permutations(A.size)
            x = kernels.canonical_act(A.action, p, backend="numba")
            y = kernels.canonical_act(A.action, p, backend="numpy")
            assert np.array_equal(x[0], y[0])
    for n in (2, 3):
        x = kernels.monoid_tables(n, backend="numba")
        y = kernels.monoid_tables(n, backend="numpy")
        assert {t.tobytes() for t in x} == {t.tobytes() for t in y}


def _run_env(value):
    env = dict(os.environ, ACTA_BACKEND=value)
    return subprocess.run(
        [sys.executable, "-c", "from acta._backend import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True,
    )


def test_backend_env_flag():
    assert _run_env("numpy").stdout.strip() == "numpy"
    bad = _run_env("fortran")
    assert bad.returncode != 0 and "ACTA_BACKEND" in bad.stderr
