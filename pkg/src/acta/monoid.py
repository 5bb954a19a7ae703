"""Finite monoids given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from acta import kernels
from acta.errors import EntryOutOfRange, NoIdentity, NotAssociative


def _frozen(x) -> np.ndarray:
    arr = np.array(x, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Monoid:
    """A monoid on the dense indices ``0..n-1``.

    Build these through :func:`validate_monoid` or one of the named
    constructors; the dataclass itself performs no checks.
    """

    table: np.ndarray
    identity: int
    zero: int | None = None
    names: tuple[str, ...] | None = None
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))
        object.__setattr__(self, "_key", self.table.shape[0].to_bytes(2, "little") + self.table.tobytes())

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @property
    def key(self) -> bytes:
        return self._key

    def __eq__(self, other):
        return isinstance(other, Monoid) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Monoid(n={self.size}, identity={self.identity}, zero={self.zero})"

    def mul(self, s: int, t: int) -> int:
        return int(self.table[s, t])

    def name(self, s: int) -> str:
        return self.names[s] if self.names else str(s)

    def index(self, label: str | int) -> int:
        """Index of an element given by name (or already by index)."""
        if isinstance(label, (int, np.integer)):
            return int(label)
        if self.names and label in self.names:
            return self.names.index(label)
        raise KeyError(f"no element named {label!r}")

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def idempotents(self) -> list[int]:
        return [s for s in range(self.size) if self.table[s, s] == s]


def _locate_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    ar = np.arange(n)
    found = [e for e in range(n) if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar)]
    if not found:
        raise NoIdentity("table has no two-sided identity")
    assert len(found) == 1, "identity must be unique"
    return found[0]


def _locate_zero(table: np.ndarray) -> int | None:
    n = table.shape[0]
    found = [z for z in range(n) if (table[z] == z).all() and (table[:, z] == z).all()]
    assert len(found) <= 1, "zero must be unique"
    return found[0] if found else None


def validate_monoid(table, names: Sequence[str] | None = None) -> Monoid:
    """Check a square table and return the monoid it defines.

    The identity and (if any) zero are located, never supplied.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise EntryOutOfRange(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if not np.issubdtype(arr.dtype, np.integer):
        raise EntryOutOfRange("table entries must be integers")
    if arr.min() < 0 or arr.max() >= n:
        raise EntryOutOfRange(f"table entries must lie in [0, {n})")
    arr = arr.astype(np.int64)
    w = kernels.assoc_witness(arr)
    if w is not None:
        raise NotAssociative(*w)
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise EntryOutOfRange(f"{len(names)} names for {n} elements")
    return Monoid(arr, _locate_identity(arr), _locate_zero(arr), names)


def build_chain_semilattice(k: int, op: str = "max", adjoin_identity: bool = False) -> Monoid:
    """The chain ``{1..k}`` under min or max, optionally with an external identity ε.

    Element ``i`` (1-based) sits at index ``i - 1``; ε, when present, is index ``k``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if op not in ("min", "max"):
        raise ValueError("op must be 'min' or 'max'")
    f = np.maximum if op == "max" else np.minimum
    idx = np.arange(k)
    table = f(idx[:, None], idx[None, :])
    names = [str(i + 1) for i in range(k)]
    if adjoin_identity:
        n = k + 1
        full = np.empty((n, n), dtype=np.int64)
        full[:k, :k] = table
        full[k, :] = np.arange(n)
        full[:, k] = np.arange(n)
        table = full
        names.append("ε")
    return validate_monoid(table, names)


def build_named_semilattice_1oef() -> Monoid:
    """The semilattice {1, 0, e, f} with ef = fe = 0."""
    names = ["1", "0", "e", "f"]
    one, zero, e, f = range(4)
    t = np.empty((4, 4), dtype=np.int64)
    for x in range(4):
        t[one, x] = t[x, one] = x
        t[zero, x] = t[x, zero] = zero
    t[e, e], t[f, f] = e, f
    t[e, f] = t[f, e] = zero
    return validate_monoid(t, names)


def trivial_monoid() -> Monoid:
    return validate_monoid([[0]], ["1"])


def canonical_table(M: Monoid) -> tuple[np.ndarray, np.ndarray]:
    """Lexicographically least relabelled table and the permutation producing it."""
    perms = kernels.permutations(M.size)
    best, i = kernels.canonical_monoid(M.table, perms)
    return best, perms[i]


def canonical_monoid(M: Monoid) -> Monoid:
    best, perm = canonical_table(M)
    names = None
    if M.names:
        names = [""] * M.size
        for old, new in enumerate(perm):
            names[new] = M.names[old]
    return validate_monoid(best, names)


def monoids_isomorphic(M: Monoid, N: Monoid) -> bool:
    return M.size == N.size and np.array_equal(canonical_table(M)[0], canonical_table(N)[0])
