"""Compiled kernels against the pure Python path.

    python3 benchmarks/bench_kernels.py [--words N] [--graphs N] [--repeat R]

The pure timings come from a child process run with ARTIN_DISABLE_NUMBA=1,
so helper kernels called from inside a kernel are uncompiled too.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from artin import kernels
from artin._accel import HAS_NUMBA
from artin.dihedral import encode
from artin.graph import random_graph


def best_of(repeat, fn, *args):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def nf_inputs(rng, n, max_len):
    words = [tuple(int(x) for x in rng.choice([1, 2, -1, -2], size=rng.integers(0, max_len + 1))) for _ in range(n)]
    return encode(words)


def rank_inputs(rng, n, max_vertices):
    nv, eus, evs, evens, offsets = [], [], [], [], [0]
    for _ in range(n):
        G = random_graph(rng, int(rng.integers(2, max_vertices + 1)))
        index = {v: i for i, v in enumerate(G.vertices)}
        nv.append(len(index))
        eus += [index[u] for u, _, _ in G.edges]
        evs += [index[v] for _, v, _ in G.edges]
        evens += [m % 2 == 0 for _, _, m in G.edges]
        offsets.append(len(eus))
    return (
        np.array(nv, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
        np.array(eus, dtype=np.int64),
        np.array(evs, dtype=np.int64),
        np.array(evens, dtype=np.bool_),
    )


def timings(args):
    rng = np.random.default_rng(0)
    arr, lengths = nf_inputs(rng, args.words, 24)
    packed = rank_inputs(rng, args.graphs, 12)
    return {
        "nf_batch (m=5)": best_of(args.repeat, kernels.nf_batch, arr, lengths, 5),
        "centraliser_ranks_batch": best_of(args.repeat, kernels.centraliser_ranks_batch, *packed),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--words", type=int, default=20000)
    p.add_argument("--graphs", type=int, default=5000)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = p.parse_args()
    if args.child:
        print(json.dumps(timings(args)))
        return
    if not HAS_NUMBA:
        sys.exit("numba is disabled or missing; nothing to compare")
    fast = timings(args)
    cmd = [sys.executable, __file__, "--child", "--words", str(args.words), "--graphs", str(args.graphs), "--repeat", str(args.repeat)]
    env = dict(os.environ, ARTIN_DISABLE_NUMBA="1")
    slow = json.loads(subprocess.run(cmd, env=env, capture_output=True, text=True, check=True).stdout)
    print(f"{'kernel':<26}{'numba s':>12}{'python s':>12}{'speedup':>10}")
    for name, t in fast.items():
        print(f"{name:<26}{t:>12.4f}{slow[name]:>12.4f}{slow[name] / t:>9.1f}x")

if __name__ == "__main__":
    main()
