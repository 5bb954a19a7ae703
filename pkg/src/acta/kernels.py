"""Hot inner loops.

Every kernel exists twice: a loop version (``_loop_*``) that numba compiles,
and a numpy version (``_np_*``).  Backtracking searches have no sensible
vectorised form, so their numpy path is the loop version run uncompiled.
Public names at the bottom of the module dispatch on ``acta._backend.BACKEND``.

All arrays are ``int64``.  An act is an ``(m, n)`` table ``action[a, s] = a·s``;
a monoid is an ``(n, n)`` table ``table[s, t] = s·t``.
"""

from __future__ import annotations

import itertools

import numpy as np

from acta._backend import BACKEND, HAVE_NUMBA, njit  # noqa: F401

# hom_search modes
ENUMERATE = 0
SEPARATE = 1
INJECTIVE = 2


# --------------------------------------------------------------------------
# validation


def _loop_assoc_witness(table):
    n = table.shape[0]
    out = np.full(3, -1, dtype=np.int64)
    for s in range(n):
        for t in range(n):
            st = table[s, t]
            for u in range(n):
                if table[st, u] != table[s, table[t, u]]:
                    out[0] = s
                    out[1] = t
                    out[2] = u
                    return out
    return out


def _np_assoc_witness(table):
    lhs = table[table]  # [s, t, u] -> (st)u
    rhs = table[:, table]  # [s, t, u] -> s(tu)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return bad[0].astype(np.int64)
    return np.full(3, -1, dtype=np.int64)


def _loop_act_witness(action, table, identity):
    """Return ``[kind, a, s, t]``: kind 0 valid, 1 not unital at a, 2 not compatible."""
    m = action.shape[0]
    n = table.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    out[0] = 0
    for a in range(m):
        if action[a, identity] != a:
            out[0] = 1
            out[1] = a
            return out
    for a in range(m):
        for s in range(n):
            b = action[a, s]
            for t in range(n):
                if action[b, t] != action[a, table[s, t]]:
                    out[0] = 2
                    out[1] = a
                    out[2] = s
                    out[3] = t
                    return out
    return out


def _np_act_witness(action, table, identity):
    m = action.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    out[0] = 0
    bad = np.flatnonzero(action[:, identity] != np.arange(m))
    if len(bad):
        out[0], out[1] = 1, bad[0]
        return out
    lhs = action[action]  # [a, s, t] -> (as)t
    rhs = action[:, table]  # [a, s, t] -> a(st)
    bad3 = np.argwhere(lhs != rhs)
    if len(bad3):
        out[0] = 2
        out[1:] = bad3[0]
    return out


# --------------------------------------------------------------------------
# congruence closure


def _uf_find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def _loop_close_partition(action, labels):
    """Smallest action-compatible partition coarser than ``labels``.

    Union-find keeps the least index as root, so the returned labels are
    already the least-representative canonical form.
    """
    m, n = action.shape
    parent = np.arange(m)
    queue_a = np.empty(m, dtype=np.int64)
    queue_b = np.empty(m, dtype=np.int64)
    head = 0
    tail = 0
    for a in range(m):
        ra = _uf_find(parent, a)
        rb = _uf_find(parent, labels[a])
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
            queue_a[tail] = a
            queue_b[tail] = labels[a]
            tail += 1
    while head < tail:
        x = queue_a[head]
        y = queue_b[head]
        head += 1
        for s in range(n):
            rx = _uf_find(parent, action[x, s])
            ry = _uf_find(parent, action[y, s])
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
                # at most m - 1 successful unions in total
                queue_a[tail] = action[x, s]
                queue_b[tail] = action[y, s]
                tail += 1
    out = np.empty(m, dtype=np.int64)
    for a in range(m):
        out[a] = _uf_find(parent, a)
    return out


def _components(m, u, v):
    """Least-index component labels of the graph on ``range(m)`` with edges u-v."""
    comp = np.arange(m)
    while True:
        prev = comp
        comp = comp.copy()
        np.minimum.at(comp, u, comp[v])
        np.minimum.at(comp, v, comp[u])
        comp = comp[comp]
        if np.array_equal(comp, prev):
            return comp


def _np_close_partition(action, labels):
    m = action.shape[0]
    base_u = np.arange(m)
    base_v = np.asarray(labels, dtype=np.int64)
    comp = _components(m, base_u, base_v)
    while True:
        # a ~ comp[a] forces a·s ~ comp[a]·s
        u = np.concatenate([base_u, action.ravel()])
        v = np.concatenate([base_v, action[comp].ravel()])
        new = _components(m, u, v)
        if np.array_equal(new, comp):
            return comp
        comp = new


# --------------------------------------------------------------------------
# homomorphism search


def _loop_hom_search(src, dst, gens, mode, sep_a, sep_b, out):
    """Backtrack over images of the generators ``gens`` of ``src``.

    ``mode`` ENUMERATE writes every hom into ``out`` (up to its capacity) and
    returns the total count; SEPARATE stops at the first hom with
    ``h[sep_a] != h[sep_b]``; INJECTIVE stops at the first injective hom.
    """
    m, n = src.shape
    p = dst.shape[0]
    k = gens.shape[0]
    cap = out.shape[0]
    h = np.full(m, -1, dtype=np.int64)
    owner = np.full(m, -1, dtype=np.int64)
    used = np.zeros(p, dtype=np.int64)
    cand = np.zeros(k + 1, dtype=np.int64)
    count = 0
    level = 0
    while level >= 0:
        if level == k:
            accept = True
            if mode == SEPARATE and h[sep_a] == h[sep_b]:
                accept = False
            if accept:
                if count < cap:
                    for a in range(m):
                        out[count, a] = h[a]
                count += 1
                if mode != ENUMERATE:
                    return count
            level -= 1
            for a in range(m):
                if owner[a] == level:
                    used[h[a]] -= 1
                    h[a] = -1
                    owner[a] = -1
            cand[level] += 1
            continue
        if cand[level] >= p:
            cand[level] = 0
            level -= 1
            if level >= 0:
                for a in range(m):
                    if owner[a] == level:
                        used[h[a]] -= 1
                        h[a] = -1
                        owner[a] = -1
                cand[level] += 1
            continue
        b = cand[level]
        g = gens[level]
        ok = True
        for s in range(n):
            a = src[g, s]
            v = dst[b, s]
            if h[a] == -1:
                if mode == INJECTIVE and used[v] > 0:
                    ok = False
                    break
                h[a] = v
                owner[a] = level
                used[v] += 1
            elif h[a] != v:
                ok = False
                break
        if ok and mode == SEPARATE:
            if h[sep_a] != -1 and h[sep_a] == h[sep_b]:
                ok = False
        if ok:
            level += 1
            cand[level] = 0
        else:
            for a in range(m):
                if owner[a] == level:
                    used[h[a]] -= 1
                    h[a] = -1
                    owner[a] = -1
            cand[level] += 1
    return count


def _cotrace_with(search):
    def run(src, dst, gens, unsep):
        """Clear from ``unsep`` every pair some hom ``src -> dst`` separates."""
        m, n = src.shape
        k = gens.shape[0]
        out = np.empty((1, m), dtype=np.int64)
        # owner[x] = position in gens of the first generator reaching x
        owner = np.full(m, -1, dtype=np.int64)
        for i in range(k):
            for s in range(n):
                x = src[gens[i], s]
                if owner[x] == -1:
                    owner[x] = i
        order = np.empty(k, dtype=np.int64)
        for b in range(m):
            for a in range(b):
                if not unsep[a, b]:
                    continue
                # generators fixing h(a) and h(b) go first so failures prune early
                order[0] = owner[a]
                pos = 1
                if owner[b] != owner[a]:
                    order[1] = owner[b]
                    pos = 2
                for i in range(k):
                    if i != owner[a] and i != owner[b]:
                        order[pos] = gens[i]
                        pos += 1
                order[0] = gens[owner[a]]
                if owner[b] != owner[a]:
                    order[1] = gens[owner[b]]
                if search(src, dst, order, SEPARATE, a, b, out) == 0:
                    continue
                for y in range(m):
                    for x in range(y):
                        if out[0, x] != out[0, y]:
                            unsep[x, y] = False
        return unsep

    return run


_loop_cotrace = _cotrace_with(_loop_hom_search)


# --------------------------------------------------------------------------
# canonical forms


def _loop_canonical_act(action, perms):
    """Lexicographically least relabelled table; returns (table, perm index)."""
    m, n = action.shape
    best = np.empty((m, n), dtype=np.int64)
    cur = np.empty((m, n), dtype=np.int64)
    inv = np.empty(m, dtype=np.int64)
    best_i = -1
    for i in range(perms.shape[0]):
        pi = perms[i]
        for a in range(m):
            inv[pi[a]] = a
        for x in range(m):
            for s in range(n):
                cur[x, s] = pi[action[inv[x], s]]
        better = best_i < 0
        if not better:
            for x in range(m):
                done = False
                for s in range(n):
                    if cur[x, s] != best[x, s]:
                        better = cur[x, s] < best[x, s]
                        done = True
                        break
                if done:
                    break
        if better:
            best[:, :] = cur
            best_i = i
    return best, best_i


def _loop_canonical_monoid(table, perms):
    n = table.shape[0]
    best = np.empty((n, n), dtype=np.int64)
    cur = np.empty((n, n), dtype=np.int64)
    inv = np.empty(n, dtype=np.int64)
    best_i = -1
    for i in range(perms.shape[0]):
        pi = perms[i]
        for a in range(n):
            inv[pi[a]] = a
        for x in range(n):
            for y in range(n):
                cur[x, y] = pi[table[inv[x], inv[y]]]
        better = best_i < 0
        if not better:
            for x in range(n):
                done = False
                for y in range(n):
                    if cur[x, y] != best[x, y]:
                        better = cur[x, y] < best[x, y]
                        done = True
                        break
                if done:
                    break
        if better:
            best[:, :] = cur
            best_i = i
    return best, best_i


def _lexmin_rows(flat):
    # np.lexsort treats the last key as primary
    return int(np.lexsort(flat.T[::-1])[0])


def _np_canonical_act(action, perms):
    inv = np.argsort(perms, axis=1)
    relabelled = np.take_along_axis(perms[:, None, :], action[inv].reshape(len(perms), 1, -1), axis=2)
    flat = relabelled.reshape(len(perms), -1)
    i = _lexmin_rows(flat)
    return flat[i].reshape(action.shape), i


def _np_canonical_monoid(table, perms):
    inv = np.argsort(perms, axis=1)
    rows = table[inv[:, :, None], inv[:, None, :]]  # [p, x, y] = T[inv x, inv y]
    relabelled = np.take_along_axis(perms[:, None, :], rows.reshape(len(perms), 1, -1), axis=2)
    flat = relabelled.reshape(len(perms), -1)
    i = _lexmin_rows(flat)
    return flat[i].reshape(table.shape), i


# --------------------------------------------------------------------------
# enumeration of tables


def _loop_monoid_tables(n, out):
    """Associative n×n tables with identity at index 0; returns the count.

    Cells outside row/column 0 run through an odometer; writes stop at the
    capacity of ``out`` but counting continues.
    """
    cap = out.shape[0]
    t = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        t[0, s] = s
        t[s, 0] = s
    free = (n - 1) * (n - 1)
    digits = np.zeros(max(free, 1), dtype=np.int64)
    count = 0
    while True:
        for c in range(free):
            t[1 + c // (n - 1), 1 + c % (n - 1)] = digits[c]
        ok = True
        for s in range(n):
            for u in range(n):
                for v in range(n):
                    if t[t[s, u], v] != t[s, t[u, v]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            if count < cap:
                out[count] = t
            count += 1
        c = free - 1
        while c >= 0:
            digits[c] += 1
            if digits[c] < n:
                break
            digits[c] = 0
            c -= 1
        if c < 0:
            break
    return count


def _np_monoid_tables(n):
    free = (n - 1) * (n - 1)
    base = np.empty((n, n), dtype=np.int64)
    base[0, :] = np.arange(n)
    base[:, 0] = np.arange(n)
    found = []
    total = n**free
    chunk = 1 << 15
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cells = np.empty((len(idx), free), dtype=np.int64)
        rest = idx.copy()
        for c in range(free - 1, -1, -1):
            cells[:, c] = rest % n
            rest //= n
        tabs = np.broadcast_to(base, (len(idx), n, n)).copy()
        tabs[:, 1:, 1:] = cells.reshape(len(idx), n - 1, n - 1)
        k = np.arange(len(idx))[:, None, None, None]
        s = np.arange(n)[None, :, None, None]
        u = np.arange(n)[None, None, :, None]
        v = np.arange(n)[None, None, None, :]
        lhs = tabs[k, tabs[k, s, u], v]
        rhs = tabs[k, s, tabs[k, u, v]]
        ok = (lhs == rhs).reshape(len(idx), -1).all(axis=1)
        found.append(tabs[ok])
    return np.concatenate(found) if found else np.empty((0, n, n), dtype=np.int64)


def _loop_act_tables(table, identity, gens, build_s, build_p, build_g, cands, offsets, m, out):
    """Acts of size m determined by the generator columns in ``cands``.

    ``cands[offsets[i]:offsets[i+1]]`` are the admissible maps for generator
    ``gens[i]``; non-generator columns are derived as a·s = (a·p)·g for the
    triples in ``build_*``.  Every candidate is then fully checked.
    """
    n = table.shape[0]
    k = gens.shape[0]
    cap = out.shape[0]
    action = np.empty((m, n), dtype=np.int64)
    for a in range(m):
        action[a, identity] = a
    choice = np.zeros(max(k, 1), dtype=np.int64)
    for i in range(k):
        if offsets[i + 1] == offsets[i]:
            return 0
    count = 0
    while True:
        for i in range(k):
            row = cands[offsets[i] + choice[i]]
            for a in range(m):
                action[a, gens[i]] = row[a]
        for j in range(build_s.shape[0]):
            s = build_s[j]
            p = build_p[j]
            g = build_g[j]
            for a in range(m):
                action[a, s] = action[action[a, p], g]
        ok = True
        for a in range(m):
            for s in range(n):
                b = action[a, s]
                for t in range(n):
                    if action[b, t] != action[a, table[s, t]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            if count < cap:
                out[count] = action
            count += 1
        i = k - 1
        while i >= 0:
            choice[i] += 1
            if choice[i] < offsets[i + 1] - offsets[i]:
                break
            choice[i] = 0
            i -= 1
        if i < 0:
            break
    return count


def _np_act_tables(table, identity, gens, build_s, build_p, build_g, cands, offsets, m):
    n = table.shape[0]
    sizes = [int(offsets[i + 1] - offsets[i]) for i in range(len(gens))]
    if any(sz == 0 for sz in sizes):
        return np.empty((0, m, n), dtype=np.int64)
    if gens.size:
        grids = np.stack(np.meshgrid(*[np.arange(sz) for sz in sizes], indexing="ij"), axis=-1)
        choice = grids.reshape(-1, len(gens))
    else:
        choice = np.zeros((1, 0), dtype=np.int64)
    K = len(choice)
    acts = np.empty((K, m, n), dtype=np.int64)
    acts[:, :, identity] = np.arange(m)
    rows = np.arange(K)[:, None]
    for i, g in enumerate(gens):
        acts[:, :, g] = cands[offsets[i] + choice[:, i]]
    for s, p, g in zip(build_s, build_p, build_g):
        acts[:, :, s] = acts[rows, acts[:, :, p], g]
    k = np.arange(K)[:, None, None, None]
    a = np.arange(m)[None, :, None, None]
    s = np.arange(n)[None, None, :, None]
    t = np.arange(n)[None, None, None, :]
    lhs = acts[k, acts[k, a, s], t]
    rhs = acts[k, a, table[s, t]]
    ok = (lhs == rhs).reshape(K, -1).all(axis=1)
    return acts[ok]


# --------------------------------------------------------------------------
# compiled twins and dispatch

_nb_assoc_witness = njit(_loop_assoc_witness)
_nb_act_witness = njit(_loop_act_witness)
_uf_find = njit(_uf_find)
_nb_close_partition = njit(_loop_close_partition)
_nb_hom_search = njit(_loop_hom_search)
_nb_cotrace = njit(_cotrace_with(_nb_hom_search))
_nb_canonical_act = njit(_loop_canonical_act)
_nb_canonical_monoid = njit(_loop_canonical_monoid)
_nb_monoid_tables = njit(_loop_monoid_tables)
_nb_act_tables = njit(_loop_act_tables)


def _as_i64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def assoc_witness(table, backend=None):
    """First triple (s, t, u) with (st)u != s(tu), or None."""
    backend = backend or BACKEND
    fn = _nb_assoc_witness if backend == "numba" else _np_assoc_witness
    w = fn(_as_i64(table))
    return None if w[0] < 0 else tuple(int(x) for x in w)


def act_witness(action, table, identity, backend=None):
    """``(kind, a, s, t)`` of the first act-axiom failure, or None."""
    backend = backend or BACKEND
    fn = _nb_act_witness if backend == "numba" else _np_act_witness
    w = fn(_as_i64(action), _as_i64(table), int(identity))
    return None if w[0] == 0 else tuple(int(x) for x in w)


def close_partition(action, labels, backend=None):
    backend = backend or BACKEND
    fn = _nb_close_partition if backend == "numba" else _np_close_partition
    return fn(_as_i64(action), _as_i64(labels))


def hom_search(src, dst, gens, mode=ENUMERATE, sep=(0, 0), backend=None, capacity=64):
    """Run the hom backtracking kernel; returns an ``(k, |src|)`` array of maps."""
    backend = backend or BACKEND
    fn = _nb_hom_search if backend == "numba" else _loop_hom_search
    src, dst, gens = _as_i64(src), _as_i64(dst), _as_i64(gens)
    cap = capacity if mode == ENUMERATE else 1
    while True:
        out = np.empty((cap, src.shape[0]), dtype=np.int64)
        count = fn(src, dst, gens, mode, int(sep[0]), int(sep[1]), out)
        if count <= cap:
            return out[:count]
        cap = count


def unseparated(src, dst, gens, unsep, backend=None):
    """Clear the pairs of the boolean upper-triangular ``unsep`` separated by homs ``src -> dst``."""
    backend = backend or BACKEND
    fn = _nb_cotrace if backend == "numba" else _loop_cotrace
    return fn(_as_i64(src), _as_i64(dst), _as_i64(gens), unsep)


def canonical_act(action, perms, backend=None):
    backend = backend or BACKEND
    fn = _nb_canonical_act if backend == "numba" else _np_canonical_act
    best, i = fn(_as_i64(action), _as_i64(perms))
    return best, int(i)


def canonical_monoid(table, perms, backend=None):
    backend = backend or BACKEND
    fn = _nb_canonical_monoid if backend == "numba" else _np_canonical_monoid
    best, i = fn(_as_i64(table), _as_i64(perms))
    return best, int(i)


def monoid_tables(n, backend=None):
    """All associative tables of order n whose identity sits at index 0."""
    backend = backend or BACKEND
    if n == 1:
        return np.zeros((1, 1, 1), dtype=np.int64)
    if backend != "numba":
        return _np_monoid_tables(n)
    count = _nb_monoid_tables(n, np.empty((0, n, n), dtype=np.int64))
    out = np.empty((count, n, n), dtype=np.int64)
    _nb_monoid_tables(n, out)
    return out


def act_tables(table, identity, gens, build, cands, offsets, m, backend=None):
    """Valid action tables of size m generated from per-generator candidate maps."""
    backend = backend or BACKEND
    build = np.asarray(build, dtype=np.int64).reshape(-1, 3)
    args = (
        _as_i64(table),
        int(identity),
        _as_i64(gens),
        _as_i64(build[:, 0]),
        _as_i64(build[:, 1]),
        _as_i64(build[:, 2]),
        _as_i64(cands).reshape(-1, m),
        _as_i64(offsets),
        int(m),
    )
    if backend != "numba":
        return _np_act_tables(*args)
    n = table.shape[0]
    count = _nb_act_tables(*args, np.empty((0, m, n), dtype=np.int64))
    out = np.empty((count, m, n), dtype=np.int64)
    _nb_act_tables(*args, out)
    return out


_PERMS: dict[int, np.ndarray] = {}


def permutations(m):
    """All permutations of range(m) as an ``(m!, m)`` array, cached."""
    if m not in _PERMS:
        _PERMS[m] = np.array(list(itertools.permutations(range(m))), dtype=np.int64).reshape(-1, m)
    return _PERMS[m]
