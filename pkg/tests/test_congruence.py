import pytest

import oracles

from acta.act import one_element_act, regular_act, validate_act
from acta.classify import annihilator_kernel
from acta.cogen import enumerate_homs
from acta.congruence import (
    all_congruences,
    canonical_labels,
    congruence,
    congruences_above,
    diagonal,
    full,
    generated,
    join,
    join_all,
    kernel,
    meet,
    meet_all,
    minimal_congruences,
    monolith,
    pair_bit,
    principal_congruence,
    rees_congruence,
)
from acta.errors import MixedActs, NotACongruence, NotASubact, SizeLimitExceeded
from acta.monoid import trivial_monoid
from conftest import set_act


def test_diagonal_and_full():
    T = one_element_act(trivial_monoid())
    assert diagonal(T) == full(T)
    A = set_act(3)
    assert diagonal(A).labels == (0, 1, 2) and full(A).labels == (0, 0, 0)


def test_principal(oefs):
    A = set_act(3)
    assert principal_congruence(A, 1, 1) == diagonal(A)
    assert principal_congruence(A, 0, 1).classes() == [(0, 1), (2,)]
    M, S, _ = oefs
    e, f = M.index("e"), M.index("f")
    rho = principal_congruence(S, e, f)
    # (e·e, f·e) = (e, 0) pulls the zero into the class of e and f
    assert sorted(rho.classes()) == sorted([(M.identity,), tuple(sorted((M.zero, e, f)))])
    assert rho.labels == oracles.principal(S.action.tolist(), e, f)


def test_rees(chain3, oefs):
    _, SC = chain3
    assert rees_congruence(SC, [1, 2]).classes() == [(0,), (1, 2)]
    assert rees_congruence(SC, [2]) == diagonal(SC)
    assert rees_congruence(SC, [0, 1, 2]) == full(SC)
    with pytest.raises(NotASubact):
        rees_congruence(SC, [0])


def test_kernel(oefs):
    M, S, _ = oefs
    ident = [h for h in enumerate_homs(S, S) if h.map == (0, 1, 2, 3)][0]
    assert kernel(ident).is_diagonal
    e = M.index("e")
    ker_e = annihilator_kernel(S, e)
    named = sorted(tuple(sorted(M.name(x) for x in c)) for c in ker_e.classes())
    assert named == [("0", "f"), ("1", "e")]
    T = one_element_act(M)
    assert all(kernel(h).is_full for h in enumerate_homs(S, T))


def test_meet_join(oefs):
    M, S, _ = oefs
    ke = annihilator_kernel(S, M.index("e"))
    kf = annihilator_kernel(S, M.index("f"))
    assert meet(ke, kf).is_diagonal
    assert meet(ke, full(S)) == ke and join(ke, diagonal(S)) == ke
    A = set_act(3)
    assert join(principal_congruence(A, 0, 1), principal_congruence(A, 1, 2)).is_full
    assert meet_all([], act=A).is_full and join_all([], act=A).is_diagonal
    with pytest.raises(MixedActs):
        meet(ke, full(A))


def test_masks_order_meets(universe):
    for i, j, A in list(universe.instances())[:60]:
        cons = all_congruences(A)
        for x in cons:
            for y in cons:
                assert (meet(x, y).mask == x.mask & y.mask)
                assert (x <= y) == (x.mask & ~y.mask == 0)
    assert pair_bit(0, 1) == 0 and pair_bit(1, 2) == 2


def test_lattice_sizes(oefs):
    M, _, _ = oefs
    assert all_congruences(one_element_act(M)) == [diagonal(one_element_act(M))]
    assert len(all_congruences(set_act(2))) == 2
    assert len(all_congruences(set_act(3))) == 5
    assert len(all_congruences(set_act(4))) == 15


def test_lattice_guard(monkeypatch):
    A = set_act(4)
    with pytest.raises(SizeLimitExceeded):
        all_congruences(A, limit=3)
    monkeypatch.setenv("ACTA_MAX_LATTICE", "3")
    with pytest.raises(SizeLimitExceeded):
        all_congruences(set_act(4))


def test_monolith_and_atoms():
    assert monolith(set_act(1)) is None
    two = set_act(2)
    assert monolith(two).is_full
    three = set_act(3)
    assert monolith(three) is None
    assert len(minimal_congruences(three)) == 3


def test_monolith_iff_unique_atom_below_all(universe):
    for i, j, A in universe.instances():
        atoms = minimal_congruences(A)
        nondiag = [c for c in all_congruences(A) if not c.is_diagonal]
        expect = len(atoms) == 1 and all(atoms[0] <= c for c in nondiag)
        assert (monolith(A) is not None) == expect


def test_congruences_above():
    A = set_act(3)
    pairs = congruences_above(A, diagonal(A))
    assert [s for s, _ in pairs] == all_congruences(A)
    pairs = congruences_above(A, full(A))
    assert len(pairs) == 1 and pairs[0][1].is_diagonal and pairs[0][1].size == 1
    pairs = congruences_above(A, principal_congruence(A, 0, 1))
    assert len(pairs) == 2 and {b.labels for _, b in pairs} == {(0, 1), (0, 0)}


def test_constructor_validation(oefs):
    M, S, _ = oefs
    assert canonical_labels([5, 5, 2]) == (0, 0, 2)
    assert congruence(S, [3, 3, 3, 3]).is_full
    with pytest.raises(NotACongruence):
        congruence(S, [0, 0, 2, 3])  # 1 ~ 0 forces e = 1·e ~ 0·e = 0
    with pytest.raises(NotACongruence):
        congruence(S, [0, 0])
    g = generated(S, [(M.index("e"), M.index("f"))])
    assert g == principal_congruence(S, M.index("e"), M.index("f"))
