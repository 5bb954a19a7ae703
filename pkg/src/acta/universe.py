"""Bounded universes: all small monoids and all small acts, up to isomorphism."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from acta import kernels
from acta.act import Act
from acta.errors import CapExceeded
from acta.monoid import Monoid, build_named_semilattice_1oef, canonical_table, validate_monoid

MONOID_CAP = 4
ACT_CAP = 4


def enumerate_monoids(n: int, cap: int = MONOID_CAP) -> list[Monoid]:
    """All monoids of order <= n up to isomorphism, sorted by (order, canonical table)."""
    if n > cap:
        raise CapExceeded(f"monoid order {n} exceeds cap {cap}")
    out = []
    for k in range(1, n + 1):
        perms = kernels.permutations(k)
        seen: dict[bytes, np.ndarray] = {}
        for t in kernels.monoid_tables(k):
            best, _ = kernels.canonical_monoid(t, perms)
            seen.setdefault(best.tobytes(), best)
        for key in sorted(seen, key=lambda b: tuple(seen[b].ravel())):
            out.append(validate_monoid(seen[key]))
    return out


def monoid_generators(M: Monoid) -> list[int]:
    """A deterministic irredundant generating set of M (the identity is never included)."""

    def generated(gens) -> set[int]:
        got = {M.identity}
        frontier = [M.identity]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    s = M.mul(p, g)
                    if s not in got:
                        got.add(s)
                        nxt.append(s)
            frontier = nxt
        return got

    gens: list[int] = []
    for s in range(M.size):
        if s != M.identity and s not in generated(gens):
            gens.append(s)
    for g in list(gens):
        rest = [x for x in gens if x != g]
        if len(generated(rest)) == M.size:
            gens = rest
    return gens


def _build_plan(M: Monoid, gens: list[int]) -> list[tuple[int, int, int]]:
    """Triples (s, p, g) with s = p·g, in an order where p is always built before s."""
    plan = []
    done = {M.identity, *gens}
    frontier = [M.identity]
    seen = {M.identity}
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                s = M.mul(p, g)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
                    if s not in done:
                        plan.append((s, p, g))
                        done.add(s)
        frontier = nxt
    return plan


def _power_relation(M: Monoid, g: int) -> tuple[int, int]:
    """(q, r) with g^q = g^r, q < r, r minimal."""
    powers = [g]
    while True:
        nxt = M.mul(powers[-1], g)
        if nxt in powers:
            return powers.index(nxt) + 1, len(powers) + 1
        powers.append(nxt)


def _candidate_maps(M: Monoid, g: int, m: int) -> np.ndarray:
    """Self-maps f of range(m) obeying the power relation of g."""
    maps = np.array(list(itertools.product(range(m), repeat=m)), dtype=np.int64).reshape(-1, m)
    q, r = _power_relation(M, g)
    rows = np.arange(len(maps))[:, None]
    pw = maps.copy()
    at_q = pw if q == 1 else None
    for i in range(2, r + 1):
        pw = maps[rows, pw]
        if i == q:
            at_q = pw
    return maps[(pw == at_q).all(axis=1)]


def enumerate_acts(M: Monoid, m: int, cap: int = ACT_CAP) -> list[Act]:
    """All acts of size <= m over M up to isomorphism, sorted by (size, canonical table)."""
    if m > cap:
        raise CapExceeded(f"act size {m} exceeds cap {cap}")
    gens = monoid_generators(M)
    plan = _build_plan(M, gens)
    out = []
    for k in range(1, m + 1):
        cands = [_candidate_maps(M, g, k) for g in gens]
        offsets = np.cumsum([0] + [len(c) for c in cands])
        flat = np.concatenate(cands) if cands else np.empty((0, k), dtype=np.int64)
        tables = kernels.act_tables(M.table, M.identity, np.array(gens, dtype=np.int64), plan, flat, offsets, k)
        perms = kernels.permutations(k)
        seen: dict[bytes, np.ndarray] = {}
        for t in tables:
            best, _ = kernels.canonical_act(t, perms)
            seen.setdefault(best.tobytes(), best)
        for key in sorted(seen, key=lambda b: tuple(seen[b].ravel())):
            out.append(Act(M, seen[key]))
    return out


@dataclass
class Universe:
    monoid_bound: int
    act_bound: int
    monoids: list[Monoid]
    acts: list[list[Act]] = field(default_factory=list)
    named: bool = True

    def instances(self):
        """(monoid index, act index, act) in canonical order."""
        for i, acts in enumerate(self.acts):
            for j, A in enumerate(acts):
                yield i, j, A

    @property
    def num_acts(self) -> int:
        return sum(len(a) for a in self.acts)

    def summary(self) -> dict:
        return {
            "monoid_bound": self.monoid_bound,
            "act_bound": self.act_bound,
            "monoids": len(self.monoids),
            "acts": self.num_acts,
            "acts_per_monoid": [len(a) for a in self.acts],
        }


def build_universe(max_monoid: int = 3, max_act: int = 4, named: bool = True) -> Universe:
    """Monoids of order <= max_monoid (plus the named {1,0,e,f} semilattice) with their acts."""
    if max_act > ACT_CAP:
        raise CapExceeded(f"act size {max_act} exceeds cap {ACT_CAP}")
    monoids = enumerate_monoids(max_monoid)
    if named:
        extra = build_named_semilattice_1oef()
        key = canonical_table(extra)[0].tobytes()
        keys = [canonical_table(M)[0].tobytes() for M in monoids]
        if key in keys:
            monoids[keys.index(key)] = extra
        else:
            monoids.append(extra)
    monoids.sort(key=lambda M: (M.size, tuple(canonical_table(M)[0].ravel())))
    acts = [enumerate_acts(M, max_act) for M in monoids]
    return Universe(max_monoid, max_act, monoids, acts, named)
