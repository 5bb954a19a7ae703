"""Homomorphisms, cotraces and cogeneration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from acta import kernels
from acta.act import Act, Hom, _same_monoid, factor_act, one_element_act, product, regular_act
from acta.congruence import (
    Congruence,
    canonical_labels,
    diagonal,
    join,
    kernel,
    meet_all,
    meet,
    monolith,
    principal_congruence,
)
from acta.errors import TooSmall

DEFAULT_WITNESS_BUDGET = 200_000


def enumerate_homs(A: Act, B: Act) -> list[Hom]:
    """Every hom ``A -> B``, in lexicographic order of the maps."""
    _same_monoid([A, B])
    maps = kernels.hom_search(A.action, B.action, A.generators)
    maps = sorted(tuple(int(x) for x in row) for row in maps)
    return [Hom(A, B, m) for m in maps]


def separating_hom(A: Act, B: Act, a: int, b: int) -> Hom | None:
    """Some hom ``A -> B`` with h(a) != h(b), if one exists."""
    found = kernels.hom_search(A.action, B.action, A.generators, mode=kernels.SEPARATE, sep=(a, b))
    return Hom(A, B, found[0]) if len(found) else None


def _separate(A: Act, Cs: Sequence[Act]) -> tuple[set[tuple[int, int]], list[Hom]]:
    """Pairs no hom into any member of ``Cs`` separates, plus the homs used."""
    _same_monoid([A, *Cs])
    unsep = {(a, b) for b in range(A.size) for a in range(b)}
    used: list[Hom] = []
    for C in Cs:
        for pair in sorted(unsep):
            if pair not in unsep:
                continue
            h = separating_hom(A, C, *pair)
            if h is None:
                continue
            used.append(h)
            unsep = {(x, y) for x, y in unsep if h.map[x] == h.map[y]}
    return unsep, used


def cotrace(A: Act, Cs: Sequence[Act]) -> Congruence:
    """Meet of the kernels of all homs from ``A`` into members of ``Cs``.

    Found pair by pair: a pair lies outside the cotrace exactly when some
    hom separates it, and every hom found removes all pairs it separates.
    """
    _same_monoid([A, *Cs])
    unsep = np.triu(np.ones((A.size, A.size), dtype=np.bool_), 1)
    for C in Cs:
        kernels.unseparated(A.action, C.action, A.generators, unsep)
    labels = list(range(A.size))
    for a, b in zip(*np.nonzero(unsep)):
        # unsep is an equivalence, so its least partner is reached first
        labels[b] = min(labels[b], labels[a])
    return Congruence(A, canonical_labels(labels))


def cotrace_by_enumeration(A: Act, Cs: Sequence[Act]) -> Congruence:
    """Same value as :func:`cotrace`, computed from the full hom lists."""
    kernels_ = [kernel(h) for C in Cs for h in enumerate_homs(A, C)]
    return meet_all(kernels_, act=A)


def cogenerates(Cs: Sequence[Act], A: Act) -> bool:
    return cotrace(A, Cs).is_diagonal


@dataclass(frozen=True)
class CogenerationWitness:
    family: tuple[Hom, ...]
    embedding: Hom

    def to_json(self) -> dict:
        return {"family": [list(h.map) for h in self.family], "embedding": list(self.embedding.map)}


def _embedding(A: Act, family: Sequence[Hom]) -> Hom:
    if not family:
        return Hom(A, one_element_act(A.monoid), (0,) * A.size)
    P, _ = product([h.target for h in family])
    dims = tuple(h.target.size for h in family)
    idx = np.ravel_multi_index(tuple(np.array(h.map) for h in family), dims)
    return Hom(A, P, tuple(int(x) for x in idx))


def cogeneration_witness(Cs: Sequence[Act], A: Act) -> CogenerationWitness | None:
    """Homs whose kernels meet to Δ and the induced embedding into their product."""
    unsep, used = _separate(A, Cs)
    if unsep:
        return None
    return CogenerationWitness(tuple(used), _embedding(A, used))


@dataclass(frozen=True)
class MinimalWitness:
    family: tuple[Hom, ...]
    proven_minimal: bool

    def __len__(self):
        return len(self.family)


def minimal_witness(B: Act, A: Act, budget: int = DEFAULT_WITNESS_BUDGET) -> MinimalWitness | None:
    """A smallest family of homs ``A -> B`` whose kernels meet to Δ.

    Subsets are swept by increasing size; after ``budget`` subset checks the
    search falls back to greedy set cover and marks the result unproven.
    """
    homs = enumerate_homs(A, B)
    full_mask = (1 << (A.size * (A.size - 1) // 2)) - 1
    if A.size == 1:
        return MinimalWitness(tuple(homs[:1]), True)
    # a hom separates exactly the pairs outside its kernel
    seps: dict[int, Hom] = {}
    for h in homs:
        s = full_mask & ~kernel(h).mask
        if s and s not in seps:
            seps[s] = h
    if not seps or _union(seps) != full_mask:
        return None
    # a hom separating a strict subset of another's pairs is never needed
    cands = [(s, h) for s, h in seps.items() if not any(t != s and t & s == s for t in seps)]
    cands.sort(key=lambda sh: sh[1].map)
    checked = 0
    for k in range(1, len(cands) + 1):
        for combo in itertools.combinations(cands, k):
            checked += 1
            if checked > budget:
                return MinimalWitness(_greedy_cover(cands, full_mask), False)
            if _union(dict(combo)) == full_mask:
                return MinimalWitness(tuple(h for _, h in combo), True)
    return None  # pragma: no cover - the full candidate list always covers


def _union(seps) -> int:
    out = 0
    for s in seps:
        out |= s
    return out


def _greedy_cover(cands, full_mask) -> tuple[Hom, ...]:
    chosen, covered = [], 0
    while covered != full_mask:
        s, h = max(cands, key=lambda sh: bin(sh[0] & ~covered).count("1"))
        chosen.append(h)
        covered |= s
    return tuple(chosen)


@dataclass(frozen=True)
class SubdirectDecomposition:
    factors: tuple[tuple[Congruence, Act], ...]
    meet_is_diagonal: bool
    all_subdirectly_irreducible: bool

    def __len__(self):
        return len(self.factors)


def maximal_separating_congruence(A: Act, a: int, b: int, principals: Sequence[Congruence] | None = None) -> Congruence:
    """A congruence maximal among those not relating ``a`` and ``b``.

    One greedy pass over the principal congruences suffices: anything that
    could still be added later could already have been added when tried.
    """
    if principals is None:
        principals = [principal_congruence(A, x, y) for y in range(A.size) for x in range(y)]
    theta = diagonal(A)
    for rho in principals:
        cand = join(theta, rho)
        if not cand.relates(a, b):
            theta = cand
    return theta


def subdirect_decomposition(A: Act) -> SubdirectDecomposition:
    """Finitely many subdirectly irreducible factors of ``A`` whose kernels meet to Δ."""
    if A.size <= 1:
        raise TooSmall("subdirect decomposition needs |A| >= 2")
    principals = [principal_congruence(A, x, y) for y in range(A.size) for x in range(y)]
    thetas: dict[tuple[int, ...], Congruence] = {}
    for b in range(A.size):
        for a in range(b):
            th = maximal_separating_congruence(A, a, b, principals)
            thetas.setdefault(th.labels, th)
    # greedy: larger factors first, keep a factor only if it refines the meet
    order = sorted(thetas.values(), key=lambda th: (-th.num_classes, th.labels))
    kept: list[Congruence] = []
    current = None
    for th in order:
        nxt = th if current is None else meet(current, th)
        if current is None or nxt != current:
            kept.append(th)
            current = nxt
        if current.is_diagonal:
            break
    for th in list(reversed(kept)):
        rest = [x for x in kept if x is not th]
        if rest and meet_all(rest).is_diagonal:
            kept = rest
    factors = tuple((th, factor_act(A, th)[0]) for th in kept)
    return SubdirectDecomposition(
        factors=factors,
        meet_is_diagonal=meet_all(kept).is_diagonal,
        all_subdirectly_irreducible=all(monolith(Q) is not None for _, Q in factors),
    )


def generator_witness(A: Act) -> Hom | None:
    """A surjective hom ``A -> S_S``, if any."""
    for h in enumerate_homs(A, regular_act(A.monoid)):
        if h.is_surjective:
            return h
    return None


def is_generator(A: Act) -> bool:
    return generator_witness(A) is not None
