"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each row is the best of ``--repeat`` wall-clock runs after one warm-up
call (which absorbs JIT compilation).
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

import numpy as np

from mptg import kernels
from mptg.graph import Graph, augmented, complement, make_cycle, make_wheel
from mptg.kernels import codes


def _best(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(seed):
    rng = random.Random(seed)
    mats = []
    for _ in range(200):
        n = 10
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        mats.append(augmented(g, perm).u8)
    # passing matrices make the checkers scan every tuple
    clique = np.ones((12, 12), dtype=np.uint8)
    return [
        ("first 6-point, K12", lambda: kernels.first_violation(clique, codes.SIX_POINT)),
        ("first 4-point x200, n=10", lambda: [kernels.first_violation(m, codes.FOUR_POINT) for m in mats]),
        ("search proper, C8", lambda: kernels.search(make_cycle(8).adj, codes.PROPER_MPTG)),
        ("search proper, W7", lambda: kernels.search(make_wheel(7).adj, codes.PROPER_MPTG)),
        ("search mptg, C7 complement", lambda: kernels.search(complement(make_cycle(7)).adj, codes.MPTG)),
        ("subset omega/chi, n=10", lambda: kernels.subset_omega_chi(make_wheel(9).masks)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    print(f"{'case':<30}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases(args.seed):
        row = {}
        for b in backends:
            with kernels.use_backend(b):
                row[b] = _best(fn, args.repeat)
        line = f"{name:<30}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['numpy'] / row['numba']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
