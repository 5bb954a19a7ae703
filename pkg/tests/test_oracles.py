"""Library results against the naive references in ``oracles``."""

import itertools

import numpy as np
import pytest

import frozen
import oracles
from acta.act import validate_act
from acta.cogen import enumerate_homs
from acta.congruence import all_congruences, principal_congruence
from acta.monoid import validate_monoid
from acta.universe import enumerate_acts, enumerate_monoids


def test_frozen_values_reproduce():
    per_order, acts, size4 = frozen._recompute()
    assert per_order == frozen.MONOIDS_PER_ORDER
    assert acts == frozen.ACTS_PER_MONOID
    assert size4 == frozen.ACTS_OF_SIZE_4


def test_monoid_census_matches_brute_force():
    found = enumerate_monoids(3)
    for n, count in frozen.MONOIDS_PER_ORDER.items():
        assert sum(M.size == n for M in found) == count
    keys = {oracles.canonical_monoid(M.table.tolist()) for M in found}
    assert keys == set(frozen.ACTS_PER_MONOID)


def test_act_census_matches_brute_force():
    for M in enumerate_monoids(3):
        key = oracles.canonical_monoid(M.table.tolist())
        acts = enumerate_acts(M, 3)
        counts = [sum(A.size == m for A in acts) for m in (1, 2, 3)]
        assert counts == frozen.ACTS_PER_MONOID[key], key
        if M.size <= 2:
            assert len(enumerate_acts(M, 4)) - len(acts) == frozen.ACTS_OF_SIZE_4[key]
        # every stored act is a genuine act and stored in canonical form
        for A in acts:
            assert oracles.is_act(A.action.tolist(), M.table.tolist())
            canon = oracles.canonical_act(A.action.tolist())
            assert tuple(A.action.ravel()) == canon


def test_named_oracle_helpers():
    assert oracles.homs([[0]], [[0], [1]]) == [(0,), (1,)]
    assert len(list(oracles.set_partitions(4))) == 15
    assert oracles.kernel_labels((3, 1, 3)) == (0, 1, 0)


@pytest.mark.parametrize("n", [1, 2])
def test_every_valid_small_table_is_accepted(n):
    """validate_monoid accepts exactly the associative tables with identity."""
    from acta.errors import ActaError

    for flat in itertools.product(range(n), repeat=n * n):
        t = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        good = oracles.identity_of(t) is not None and oracles.is_associative(t)
        try:
            validate_monoid(t)
            accepted = True
        except ActaError:
            accepted = False
        assert accepted == good


def _universe_pairs(universe, max_monoid=3):
    for i, M in enumerate(universe.monoids):
        if M.size <= max_monoid:
            for A in universe.acts[i]:
                for B in universe.acts[i]:
                    yield A, B


def test_hom_enumeration_small_monoids(universe):
    for A, B in _universe_pairs(universe, max_monoid=2):
        got = [h.map for h in enumerate_homs(A, B)]
        assert got == oracles.homs(A.action.tolist(), B.action.tolist())


def test_congruence_lattice_against_partitions(universe):
    for i, j, A in universe.instances():
        lib = {c.labels for c in all_congruences(A)}
        assert lib == oracles.congruences(A.action.tolist())


def test_principal_is_meet_of_containing_congruences(universe):
    for i, j, A in universe.instances():
        if A.monoid.size > 3:
            continue
        for a, b in itertools.combinations(range(A.size), 2):
            assert principal_congruence(A, a, b).labels == oracles.principal(A.action.tolist(), a, b)


def test_brute_force_helpers_agree():
    M = validate_monoid([[0, 1], [1, 1]])
    A = validate_act(M, np.array([[0, 1], [1, 1], [2, 1]]))
    assert oracles.homs(A.action.tolist(), A.action.tolist()) == oracles.homs_vectorised(A.action, A.action)
