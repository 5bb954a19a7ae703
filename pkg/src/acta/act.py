"""Finite right S-acts, subacts, homomorphisms and the basic constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from acta import kernels
from acta.errors import (
    EmptyAct,
    EntryOutOfRange,
    MixedMonoids,
    NotACongruence,
    NotASubact,
    NotCompatible,
    NotUnital,
    SizeLimitExceeded,
)
from acta.monoid import Monoid

if TYPE_CHECKING:
    from acta.congruence import Congruence

CANONICAL_EXHAUSTIVE_MAX = 8


@dataclass(frozen=True, eq=False)
class Act:
    """A right act of ``monoid`` on ``0..m-1`` with ``action[a, s] = a·s``."""

    monoid: Monoid
    action: np.ndarray
    names: tuple[str, ...] | None = None
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        arr = np.array(self.action, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "action", arr)
        object.__setattr__(self, "_key", self.monoid.key + b"|" + arr.shape[0].to_bytes(4, "little") + arr.tobytes())

    @property
    def size(self) -> int:
        return self.action.shape[0]

    @property
    def key(self) -> bytes:
        return self._key

    def __eq__(self, other):
        return isinstance(other, Act) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Act(m={self.size}, n={self.monoid.size})"

    def __len__(self):
        return self.size

    def act(self, a: int, s: int) -> int:
        return int(self.action[a, s])

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    @cached_property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero((self.action == np.arange(self.size)[:, None]).all(axis=1)))

    @cached_property
    def generators(self) -> np.ndarray:
        """Least-index representatives of the maximal cyclic subacts.

        This is the unique minimal generating set up to choice of
        representative; hom searches branch only on these elements.
        """
        masks = [_mask(row) for row in self.action]
        gens = []
        for a, ma in enumerate(masks):
            dominated = any(ma != mb and ma & mb == ma for mb in masks)
            if dominated:
                continue
            if any(masks[g] == ma for g in gens):
                continue
            gens.append(a)
        return np.array(gens, dtype=np.int64)


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << int(x)
    return m


def _elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Subact:
    act: Act
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(int(x) for x in set(self.elements))))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def __iter__(self):
        return iter(self.elements)

    @property
    def mask(self) -> int:
        return _mask(self.elements)

    def issubset(self, other: Subact) -> bool:
        return set(self.elements) <= set(other.elements)

    def as_act(self) -> tuple[Act, Hom]:
        """The subact as an act in its own right, with the inclusion hom."""
        pos = {a: i for i, a in enumerate(self.elements)}
        rows = [[pos[int(self.act.action[a, s])] for s in range(self.act.monoid.size)] for a in self.elements]
        names = tuple(self.act.name(a) for a in self.elements) if self.act.names else None
        B = Act(self.act.monoid, np.array(rows, dtype=np.int64).reshape(len(self.elements), -1), names)
        return B, Hom(B, self.act, self.elements)


@dataclass(frozen=True)
class Hom:
    """A total map ``source -> target`` commuting with the action."""

    source: Act
    target: Act
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __repr__(self) -> str:
        return f"Hom({self.source.size}->{self.target.size}, {list(self.map)})"

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def image(self) -> Subact:
        return Subact(self.target, self.map)

    def is_hom(self) -> bool:
        h = np.array(self.map, dtype=np.int64)
        return bool(np.array_equal(h[self.source.action], self.target.action[h]))

    def compose(self, other: Hom) -> Hom:
        """``self ∘ other``: apply ``other`` first."""
        return Hom(other.source, self.target, tuple(self.map[x] for x in other.map))


# --------------------------------------------------------------------------
# construction


def validate_act(M: Monoid, action, names: Sequence[str] | None = None) -> Act:
    arr = np.asarray(action)
    if arr.size == 0 or (arr.ndim == 2 and arr.shape[0] == 0):
        raise EmptyAct("acts are non-empty")
    if arr.ndim != 2 or arr.shape[1] != M.size:
        raise EntryOutOfRange(f"action must be an m×{M.size} array, got shape {arr.shape}")
    m = arr.shape[0]
    if not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0 or arr.max() >= m:
        raise EntryOutOfRange(f"action entries must lie in [0, {m})")
    arr = arr.astype(np.int64)
    w = kernels.act_witness(arr, M.table, M.identity)
    if w is not None:
        if w[0] == 1:
            raise NotUnital(w[1])
        raise NotCompatible(w[1], w[2], w[3])
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != m:
            raise EntryOutOfRange(f"{len(names)} names for {m} elements")
    return Act(M, arr, names)


def regular_act(M: Monoid) -> Act:
    """S acting on itself by right multiplication."""
    return Act(M, M.table, M.names)


def one_element_act(M: Monoid) -> Act:
    return Act(M, np.zeros((1, M.size), dtype=np.int64), ("θ",))


def _same_monoid(acts: Sequence[Act]) -> Monoid:
    if not acts:
        raise ValueError("need at least one act")
    M = acts[0].monoid
    if any(A.monoid != M for A in acts):
        raise MixedMonoids("acts are over different monoids")
    return M


# --------------------------------------------------------------------------
# subacts


def cyclic_subact(A: Act, a: int) -> Subact:
    return Subact(A, tuple(int(x) for x in A.action[a]))


def subact_closure(A: Act, elements: Iterable[int]) -> Subact:
    """Smallest subact containing ``elements`` (the union of their cyclic subacts)."""
    els = {int(x) for x in elements}
    out = set()
    for a in els:
        out.update(int(x) for x in A.action[a])
    return Subact(A, tuple(out))


def is_subact(A: Act, elements: Iterable[int]) -> bool:
    els = {int(x) for x in elements}
    return bool(els) and all(int(x) in els for a in els for x in A.action[a])


def as_subact(A: Act, B) -> Subact:
    """Accept a Subact or an iterable of elements; raise NotASubact if not closed."""
    els = B.elements if isinstance(B, Subact) else tuple(B)
    if isinstance(B, Subact) and B.act != A:
        raise NotASubact("subact belongs to a different act")
    if not is_subact(A, els):
        raise NotASubact(f"{sorted(els)} is not closed under the action")
    return Subact(A, els)


def all_subacts(A: Act) -> list[Subact]:
    """Every non-empty subact, as closed unions of cyclic subacts.

    Sorted by size, then lexicographically by elements.
    """
    cyclic = sorted({_mask(row) for row in A.action})
    seen = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for u in frontier:
            for c in cyclic:
                v = u | c
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    subs = [_elements(x) for x in seen]
    subs.sort(key=lambda e: (len(e), e))
    return [Subact(A, e) for e in subs]


# --------------------------------------------------------------------------
# products, coproducts, factors


def product(acts: Sequence[Act]) -> tuple[Act, list[Hom]]:
    """Cartesian product with componentwise action, plus the projections.

    The tuple ``(a_1, ..., a_k)`` is stored at ``np.ravel_multi_index`` of it:
    mixed radix with the first component most significant.
    """
    M = _same_monoid(acts)
    dims = tuple(A.size for A in acts)
    coords = np.array(np.unravel_index(np.arange(int(np.prod(dims))), dims))  # (k, N)
    images = np.stack([A.action[c] for A, c in zip(acts, coords)])  # (k, N, n)
    action = np.ravel_multi_index(tuple(images), dims)
    P = Act(M, action)
    projections = [Hom(P, A, tuple(c)) for A, c in zip(acts, coords)]
    return P, projections


def coproduct(acts: Sequence[Act]) -> tuple[Act, list[Hom]]:
    """Disjoint union, summands laid out consecutively; plus the injections."""
    M = _same_monoid(acts)
    offsets = np.cumsum([0] + [A.size for A in acts])
    action = np.concatenate([A.action + off for A, off in zip(acts, offsets)])
    C = Act(M, action)
    injections = [Hom(A, C, tuple(range(off, off + A.size))) for A, off in zip(acts, offsets)]
    return C, injections


def factor_act(A: Act, theta: Congruence) -> tuple[Act, Hom]:
    """``A/θ`` with classes ordered by least element, and the canonical surjection."""
    labels = np.asarray(theta.labels, dtype=np.int64)
    if labels.shape != (A.size,):
        raise NotACongruence("labels do not match the act")
    if not np.array_equal(labels[A.action], labels[A.action[labels]]):
        raise NotACongruence("partition is not compatible with the action")
    reps = np.unique(labels)
    pos = np.full(A.size, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    cls = pos[labels]
    action = cls[A.action[reps]]
    names = None
    if A.names:
        names = tuple("[" + ",".join(A.name(a) for a in range(A.size) if labels[a] == r) + "]" for r in reps)
    Q = Act(A.monoid, action, names)
    return Q, Hom(A, Q, tuple(cls))


def decompose_indecomposable(A: Act) -> list[Subact]:
    """Connected components of the graph with edges a to a·s; each is an indecomposable summand."""
    m, n = A.action.shape
    comp = kernels._components(m, np.repeat(np.arange(m), n), A.action.ravel())
    return [Subact(A, tuple(np.flatnonzero(comp == r))) for r in np.unique(comp)]


# --------------------------------------------------------------------------
# isomorphism


def act_isomorphism(A: Act, B: Act) -> tuple[int, ...] | None:
    """A bijective hom ``A -> B`` as a tuple, or None when the acts are not isomorphic."""
    _same_monoid([A, B])
    if A.size != B.size or len(A.fixed_points) != len(B.fixed_points):
        return None
    found = kernels.hom_search(A.action, B.action, A.generators, mode=kernels.INJECTIVE)
    return tuple(int(x) for x in found[0]) if len(found) else None


def act_isomorphic(A: Act, B: Act) -> bool:
    return act_isomorphism(A, B) is not None


def canonical_act(A: Act) -> Act:
    """Relabelling of ``A`` with the lexicographically least action table."""
    if A.size > CANONICAL_EXHAUSTIVE_MAX:
        raise SizeLimitExceeded(f"canonical form supported for m <= {CANONICAL_EXHAUSTIVE_MAX}")
    perms = kernels.permutations(A.size)
    best, i = kernels.canonical_act(A.action, perms)
    names = None
    if A.names:
        lst = [""] * A.size
        for old, new in enumerate(perms[i]):
            lst[new] = A.names[old]
        names = tuple(lst)
    return Act(A.monoid, best, names)


def relabel(A: Act, perm: Sequence[int]) -> Act:
    """The act obtained by renaming element ``a`` to ``perm[a]``."""
    pi = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(pi)
    return Act(A.monoid, pi[A.action[inv]])

