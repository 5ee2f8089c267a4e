"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--n 16] [--repeat 3]
"""

import argparse
import time

from kronbounds import _backend, _pykernels
from kronbounds.kronecker import _canonical_margins, alternating_terms
from kronbounds.partitions import enumerate_partitions


def character_table(kernels, n):
    parts = enumerate_partitions(n)
    for cycle in parts:
        memo = {}
        for lam in parts:
            kernels.mn_character(lam, cycle, memo)


def contingency_batch(kernels, n):
    # the margins the alternating sum actually visits for a few hard triples
    shapes = [p for p in enumerate_partitions(n) if 2 <= len(p) <= 4][:6]
    for lam in shapes:
        vecs = [v for _, _, v in alternating_terms(lam)]
        for x in vecs:
            can = _canonical_margins(x, lam, lam)
            if can:
                kernels.count_arrays(*can, False)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--ca-n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _backend.compiled is None:
        print("compiled kernels unavailable; only the pure backend can be timed")
    rows = []
    for label, fn in (("character table", lambda k: character_table(k, args.n)),
                      ("contingency counts", lambda k: contingency_batch(k, args.ca_n))):
        pure = best_of(lambda: fn(_pykernels), args.repeat)
        line = f"{label:<20} python {pure:8.3f}s"
        if _backend.compiled is not None:
            comp = best_of(lambda: fn(_backend.compiled), args.repeat)
            line += f"  cython {comp:8.3f}s  speedup {pure / comp:5.1f}x"
        rows.append(line)
    print("\n".join(rows))


if __name__ == "__main__":
    main()
