"""Time every kernel under the numba and numpy backends and check they agree.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first numba call of each kernel includes compilation (or a cache load);
it is run once as a warm-up and excluded from the timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from acta import kernels
from acta.act import product, regular_act
from acta.monoid import build_chain_semilattice, build_named_semilattice_1oef
from acta.universe import _build_plan, _candidate_maps, enumerate_acts, monoid_generators


def _cases():
    M = build_named_semilattice_1oef()
    C5 = build_chain_semilattice(5, "max", adjoin_identity=True)
    acts = enumerate_acts(M, 3)
    big, _ = product([acts[-1], acts[-2], acts[-3]])
    S = regular_act(C5)
    labels = np.arange(big.size, dtype=np.int64)
    labels[1] = 0
    gens = monoid_generators(M)
    plan = _build_plan(M, gens)
    cands = [_candidate_maps(M, g, 3) for g in gens]
    offsets = np.cumsum([0] + [len(c) for c in cands])
    perms = kernels.permutations(4)
    return {
        "assoc_witness": lambda b: kernels.assoc_witness(C5.table, backend=b),
        "act_witness": lambda b: kernels.act_witness(big.action, M.table, M.identity, backend=b),
        "close_partition": lambda b: kernels.close_partition(big.action, labels, backend=b),
        "hom_search": lambda b: kernels.hom_search(big.action, acts[-1].action, big.generators, backend=b),
        "cotrace": lambda b: kernels.unseparated(
            big.action, acts[-1].action, big.generators, np.triu(np.ones((big.size,) * 2, dtype=np.bool_), 1), backend=b
        ),
        "canonical_act": lambda b: kernels.canonical_act(S.action[:4, :4] % 4, perms, backend=b),
        "canonical_monoid": lambda b: kernels.canonical_monoid(M.table, perms, backend=b),
        "monoid_tables(3)": lambda b: kernels.monoid_tables(3, backend=b),
        "act_tables": lambda b: kernels.act_tables(
            M.table, M.identity, np.array(gens), plan, np.concatenate(cands), offsets, 3, backend=b
        ),
    }


def _same(x, y) -> bool:
    if isinstance(x, tuple):
        return len(x) == len(y) and all(_same(a, b) for a, b in zip(x, y))
    if x is None or y is None:
        return x is y
    return np.array_equal(np.asarray(x), np.asarray(y))


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    backends = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]
    print(f"{'kernel':18s} " + " ".join(f"{b + ' (ms)':>12s}" for b in backends) + f" {'speedup':>8s}  agree")
    for name, run in _cases().items():
        outs = {b: run(b) for b in backends}  # warm-up
        times = {b: _time(lambda: run(b), args.repeat) * 1e3 for b in backends}
        agree = all(_same(outs[backends[0]], outs[b]) for b in backends)
        speed = times["numpy"] / times["numba"] if "numba" in times and times["numba"] > 0 else float("nan")
        print(f"{name:18s} " + " ".join(f"{times[b]:12.3f}" for b in backends) + f" {speed:8.1f}x  {agree}")


if __name__ == "__main__":
    main()
