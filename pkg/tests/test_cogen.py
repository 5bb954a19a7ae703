import itertools

import pytest

import oracles
from acta.act import coproduct, one_element_act, product, regular_act
from acta.classify import right_annihilator
from acta.cogen import (
    cogenerates,
    cogeneration_witness,
    cotrace,
    cotrace_by_enumeration,
    enumerate_homs,
    generator_witness,
    is_generator,
    minimal_witness,
    separating_hom,
    subdirect_decomposition,
)
from acta.congruence import kernel, meet_all, monolith
from acta.errors import TooSmall
from conftest import set_act


def test_homs_from_regular_act_are_left_translations(universe):
    for i, M in enumerate(universe.monoids):
        S = regular_act(M)
        for A in universe.acts[i]:
            maps = {h.map for h in enumerate_homs(S, A)}
            assert maps == {tuple(int(x) for x in A.action[a]) for a in range(A.size)}


def test_homs_from_one_element_act(oefs):
    M, S, A = oefs
    T = one_element_act(M)
    assert [h.map for h in enumerate_homs(T, A)] == [(a,) for a in A.fixed_points]
    assert any(h.map == (0, 1, 2) for h in enumerate_homs(A, A))


def test_hom_flags(oefs):
    M, S, A = oefs
    homs = enumerate_homs(A, A)
    assert [h.map for h in homs] == oracles.homs(A.action.tolist(), A.action.tolist())
    ident = [h for h in homs if h.map == (0, 1, 2)][0]
    assert ident.is_injective and ident.is_surjective and ident.is_hom()
    assert repr(ident) == "Hom(3->3, [0, 1, 2])"


def test_cotrace_examples(oefs):
    M, S, A = oefs
    assert cotrace(A, [A]).is_diagonal
    assert cotrace(S, [A]).is_diagonal
    assert cotrace(S, [A]) == right_annihilator(A)


def test_cotrace_of_regular_is_annihilator(universe):
    for i, M in enumerate(universe.monoids):
        S = regular_act(M)
        for A in universe.acts[i]:
            assert cotrace(S, [A]) == right_annihilator(A)


def test_cotrace_two_routes_agree(universe):
    for i in range(len(universe.monoids)):
        acts = universe.acts[i]
        for A in acts:
            for C in acts[:6]:
                assert cotrace(A, [C]) == cotrace_by_enumeration(A, [C])
            pair = acts[-2:]
            assert cotrace(A, pair) == cotrace_by_enumeration(A, pair)


def test_cotrace_with_no_homs_is_full(universe):
    Z2 = universe.acts[2]  # the two-element group
    orbit = [A for A in Z2 if A.size == 2 and not A.fixed_points][0]
    point = Z2[0]
    assert not enumerate_homs(point, orbit)
    assert cotrace(point, [orbit]).is_full


def test_cogenerates(oefs):
    M, S, A = oefs
    assert cogenerates([A], A)
    assert cogenerates([A], S)
    T = one_element_act(M)
    assert not cogenerates([T], A)
    w = cogeneration_witness([A], S)
    assert w is not None and w.embedding.is_injective and w.embedding.is_hom()
    assert meet_all([kernel(h) for h in w.family]).is_diagonal
    assert cogeneration_witness([T], A) is None
    assert set(w.to_json()) == {"family", "embedding"}


def test_separating_hom(oefs):
    M, S, A = oefs
    h = separating_hom(S, A, M.index("e"), M.index("f"))
    assert h is not None and h.map[M.index("e")] != h.map[M.index("f")]
    assert separating_hom(A, one_element_act(M), 0, 1) is None


def test_minimal_witness(oefs, universe):
    M, S, A = oefs
    assert len(minimal_witness(A, A)) == 1
    w = minimal_witness(A, S)
    assert len(w) == 2 and w.proven_minimal
    assert minimal_witness(one_element_act(M), A) is None
    # exact minimum against a brute-force subset sweep on a few universe pairs
    acts = universe.acts[4]
    for X, Y in itertools.product(acts[:10], repeat=2):
        homs = enumerate_homs(Y, X)
        best = None
        for k in range(1, len(homs) + 1):
            for combo in itertools.combinations(homs, k):
                if meet_all([kernel(h) for h in combo]).is_diagonal:
                    best = k
                    break
            if best:
                break
        w = minimal_witness(X, Y)
        assert (w is None) == (best is None)
        if w is not None:
            assert len(w) == best


def test_minimal_witness_budget_fallback(oefs):
    M, S, A = oefs
    w = minimal_witness(A, S, budget=0)
    assert w is not None and not w.proven_minimal and len(w) >= 2


def test_subdirect_decomposition():
    two = set_act(2)
    dec = subdirect_decomposition(two)
    assert len(dec) == 1 and dec.factors[0][0].is_diagonal
    dec = subdirect_decomposition(set_act(3))
    assert len(dec) == 2 and dec.meet_is_diagonal and dec.all_subdirectly_irreducible
    assert all(Q.size == 2 for _, Q in dec.factors)
    with pytest.raises(TooSmall):
        subdirect_decomposition(set_act(1))


def test_subdirect_decomposition_of_si_act_is_itself(universe):
    for i, j, A in universe.instances():
        if A.size >= 2 and monolith(A) is not None:
            dec = subdirect_decomposition(A)
            assert len(dec) == 1 and dec.factors[0][0].is_diagonal


def test_generator(oefs):
    M, S, A = oefs
    assert is_generator(S)
    assert not is_generator(one_element_act(M))
    assert not is_generator(A)
    h = generator_witness(coproduct([A, S])[0])
    assert h is not None and h.is_surjective
    assert is_generator(product([S, S])[0])
