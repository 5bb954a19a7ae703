"""Congruences on finite acts as canonically labelled partitions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from acta import kernels
from acta.act import Act, Hom, Subact, as_subact, factor_act
from acta.errors import MixedActs, NotACongruence, SizeLimitExceeded

DEFAULT_MAX_LATTICE = 10


def pair_bit(a: int, b: int) -> int:
    """Bit position of the unordered pair {a, b}, a != b; independent of |A|."""
    if a > b:
        a, b = b, a
    return b * (b - 1) // 2 + a


def canonical_labels(classes: Sequence[int]) -> tuple[int, ...]:
    """Relabel arbitrary class ids so each element points at its class's least member."""
    first: dict[int, int] = {}
    out = []
    for a, c in enumerate(classes):
        c = int(c)
        if c not in first:
            first[c] = a
        out.append(first[c])
    return tuple(out)


@dataclass(frozen=True)
class Congruence:
    """``labels[a]`` is the least element of the class of ``a``."""

    act: Act
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    def __repr__(self):
        return f"Congruence({list(self.labels)})"

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def mask(self) -> int:
        """Bitmask of the related unordered pairs; meets are bitwise ANDs."""
        out = 0
        by_class: dict[int, list[int]] = {}
        for a, r in enumerate(self.labels):
            by_class.setdefault(r, []).append(a)
        for members in by_class.values():
            for j, b in enumerate(members):
                for a in members[:j]:
                    out |= 1 << pair_bit(a, b)
        return out

    def relates(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def classes(self) -> list[tuple[int, ...]]:
        by_class: dict[int, list[int]] = {}
        for a, r in enumerate(self.labels):
            by_class.setdefault(r, []).append(a)
        return [tuple(v) for _, v in sorted(by_class.items())]

    @property
    def num_classes(self) -> int:
        return len(set(self.labels))

    @property
    def is_diagonal(self) -> bool:
        return self.num_classes == self.size

    @property
    def is_full(self) -> bool:
        return self.num_classes == 1

    def __le__(self, other: Congruence) -> bool:
        """Containment of relations: ``self ⊆ other``."""
        _check_same(self, other)
        return all(other.labels[a] == other.labels[r] for a, r in enumerate(self.labels))

    def __ge__(self, other: Congruence) -> bool:
        return other <= self

    def __lt__(self, other: Congruence) -> bool:
        return self != other and self <= other


def _check_same(*cs: Congruence) -> Act:
    A = cs[0].act
    if any(c.act != A for c in cs):
        raise MixedActs("congruences live on different acts")
    return A


def congruence(A: Act, classes: Sequence[int]) -> Congruence:
    """Build a congruence from any class labelling; raise if not action-compatible."""
    if len(classes) != A.size:
        raise NotACongruence(f"{len(classes)} labels for an act of size {A.size}")
    lab = np.array(canonical_labels(classes), dtype=np.int64)
    if not np.array_equal(lab[A.action], lab[A.action[lab]]):
        raise NotACongruence("partition is not compatible with the action")
    return Congruence(A, tuple(lab))


def diagonal(A: Act) -> Congruence:
    return Congruence(A, tuple(range(A.size)))


def full(A: Act) -> Congruence:
    return Congruence(A, (0,) * A.size)


def generated(A: Act, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing the given pairs."""
    m = A.size
    u, v = [], []
    for a, b in pairs:
        u.append(a)
        v.append(b)
    comp = kernels._components(m, np.array(u, dtype=np.int64), np.array(v, dtype=np.int64))
    return Congruence(A, tuple(kernels.close_partition(A.action, comp)))


def principal_congruence(A: Act, a: int, b: int) -> Congruence:
    """ρ(a, b): the smallest congruence identifying ``a`` and ``b``."""
    labels = np.arange(A.size)
    labels[max(a, b)] = min(a, b)
    return Congruence(A, tuple(kernels.close_partition(A.action, labels)))


def rees_congruence(A: Act, B: Subact | Iterable[int]) -> Congruence:
    """ρ_B = B×B ∪ Δ."""
    B = as_subact(A, B)
    r = B.elements[0]
    labels = list(range(A.size))
    for b in B.elements:
        labels[b] = r
    return Congruence(A, tuple(labels))


def kernel(h: Hom) -> Congruence:
    return Congruence(h.source, canonical_labels(h.map))


def meet(c1: Congruence, c2: Congruence) -> Congruence:
    _check_same(c1, c2)
    return Congruence(c1.act, canonical_labels([x * c1.size + y for x, y in zip(c1.labels, c2.labels)]))


def meet_all(cs: Sequence[Congruence], act: Act | None = None) -> Congruence:
    """Meet of a family; the empty meet is ∇ (needs ``act``)."""
    if not cs:
        if act is None:
            raise ValueError("empty meet needs the act")
        return full(act)
    _check_same(*cs)
    return reduce(meet, cs)


def join(c1: Congruence, c2: Congruence) -> Congruence:
    A = _check_same(c1, c2)
    m = A.size
    u = np.concatenate([np.arange(m), np.arange(m)])
    v = np.array(c1.labels + c2.labels, dtype=np.int64)
    comp = kernels._components(m, u, v)
    # the closure is a no-op for genuine congruences but keeps join total
    return Congruence(A, tuple(kernels.close_partition(A.action, comp)))


def join_all(cs: Sequence[Congruence], act: Act | None = None) -> Congruence:
    if not cs:
        if act is None:
            raise ValueError("empty join needs the act")
        return diagonal(act)
    return reduce(join, cs)


def lattice_limit() -> int:
    env = os.environ.get("ACTA_MAX_LATTICE")
    return int(env) if env else DEFAULT_MAX_LATTICE


_LATTICE_CACHE: dict[bytes, list[Congruence]] = {}


def all_congruences(A: Act, limit: int | None = None) -> list[Congruence]:
    """Con(A) as the join-closure of Δ and the principal congruences.

    Sorted by number of classes descending (Δ first, ∇ last), then by labels.
    """
    limit = lattice_limit() if limit is None else limit
    if A.size > limit:
        raise SizeLimitExceeded(f"|A| = {A.size} exceeds the congruence-lattice limit {limit}")
    if A.key in _LATTICE_CACHE:
        return list(_LATTICE_CACHE[A.key])
    m = A.size
    principals = {}
    for b in range(m):
        for a in range(b):
            c = principal_congruence(A, a, b)
            principals[c.labels] = c
    gens = sorted(principals.values(), key=lambda c: c.labels)
    found = {diagonal(A).labels: diagonal(A)}
    found.update(principals)
    frontier = list(gens)
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                j = join(c, g)
                if j.labels not in found:
                    found[j.labels] = j
                    nxt.append(j)
        frontier = nxt
    out = sorted(found.values(), key=lambda c: (-c.num_classes, c.labels))
    _LATTICE_CACHE[A.key] = out
    return list(out)


def minimal_congruences(A: Act) -> list[Congruence]:
    """The atoms of Con(A): minimal non-diagonal congruences."""
    nondiag = [c for c in all_congruences(A) if not c.is_diagonal]
    return [c for c in nondiag if not any(d < c for d in nondiag)]


def monolith(A: Act) -> Congruence | None:
    """The least non-diagonal congruence when it exists (A subdirectly irreducible)."""
    nondiag = [c for c in all_congruences(A) if not c.is_diagonal]
    if not nondiag:
        return None
    mu = meet_all(nondiag)
    return None if mu.is_diagonal else mu


def congruences_above(A: Act, theta: Congruence) -> list[tuple[Congruence, Congruence]]:
    """Pairs (σ, σ̄) for every σ ⊇ θ, with σ̄ = {([a], [b]) | a σ b} on A/θ."""
    Q, pi = factor_act(A, theta)
    reps = sorted(set(theta.labels))
    out = []
    for sigma in all_congruences(A):
        if theta <= sigma:
            bar = tuple(pi.map[sigma.labels[r]] for r in reps)
            out.append((sigma, Congruence(Q, bar)))
    return out
