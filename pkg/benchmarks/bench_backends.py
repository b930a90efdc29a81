"""Time the numba kernels against the pure-numpy fallback.

Runs the three hot kernels on identical inputs, checks that the two
implementations agree, and prints a timing table.  The first numba call
compiles (or loads the on-disk cache); that cost is reported separately
from the steady-state timing.

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --n-spins 22 --generators 20 --repeats 5
"""

from __future__ import annotations

import argparse
import math
import random
import time

import numpy as np

from spincss import _kernels_numba, _kernels_numpy
from spincss.gf2 import BitMatrix, BitVector, independent_row_indices


def random_masks(rng: random.Random, count: int, n_bits: int) -> np.ndarray:
    return np.array(
        [rng.randrange(1, 1 << n_bits) for _ in range(count)], dtype=np.uint64
    )


def independent_masks(rng: random.Random, count: int, n_bits: int) -> np.ndarray:
    while True:
        masks = random_masks(rng, count, n_bits)
        rows = [BitVector(n_bits, int(w)) for w in masks]
        if len(independent_row_indices(BitMatrix.from_rows(rows, n_bits))) == count:
            return masks


def timed(fn, repeats: int):
    best = math.inf
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-spins", type=int, default=20,
                        help="spin count for the configuration sweep (2**n states)")
    parser.add_argument("--edges", type=int, default=12,
                        help="edge count for the configuration sweep")
    parser.add_argument("--generators", type=int, default=18,
                        help="generator count for the span kernels (2**g elements)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats; the best run is reported")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    edge_masks = random_masks(rng, args.edges, args.n_spins)
    couplings = np.array([rng.choice((-2.0, -1.0, 1.0, 2.0)) for _ in range(args.edges)])
    n_bits = max(args.generators + 2, 24)
    gen_masks = independent_masks(rng, args.generators, n_bits)
    gen_couplings = np.array([rng.uniform(-1, 1) for _ in range(n_bits)])
    beta = 0.7

    # compile / cache-load cost, measured on a tiny input
    t0 = time.perf_counter()
    _kernels_numba.partition_partials(edge_masks[:2], couplings[:2], beta, 4, 0.0)
    _kernels_numba.span_exp_partials(gen_masks[:2], gen_couplings, beta, 0.0)
    _kernels_numba.weight_tally(gen_masks[:2], n_bits)
    warmup = time.perf_counter() - t0

    cases = [
        (
            f"partition sweep, 2^{args.n_spins} configs x {args.edges} edges",
            lambda mod: float(
                np.sum(mod.partition_partials(edge_masks, couplings, beta, args.n_spins, 0.0))
            ),
        ),
        (
            f"span energies, 2^{args.generators} group elements",
            lambda mod: float(
                np.sum(mod.span_exp_partials(gen_masks, gen_couplings, beta, 0.0))
            ),
        ),
        (
            f"weight tally, 2^{args.generators} group elements",
            lambda mod: mod.weight_tally(gen_masks, n_bits),
        ),
    ]

    print(f"numba warm-up (compile or cache load): {warmup:.2f}s")
    print()
    header = f"{'kernel':<48} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, call in cases:
        np_result, np_time = timed(lambda: call(_kernels_numpy), args.repeats)
        nb_result, nb_time = timed(lambda: call(_kernels_numba), args.repeats)
        if isinstance(np_result, float):
            rel = abs(np_result - nb_result) / max(abs(np_result), 1e-300)
            agree = rel < 1e-9
        else:
            agree = bool(np.array_equal(np_result, nb_result))
        if not agree:
            print(f"{label}: BACKENDS DISAGREE")
            return 1
        print(f"{label:<48} {np_time:>9.3f}s {nb_time:>9.3f}s {np_time / nb_time:>7.1f}x")
    print()
    print("all kernels agree across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
