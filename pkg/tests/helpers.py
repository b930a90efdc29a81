"""Shared oracles for the test suite.

Everything here is written the slow, obvious way on purpose: pure-Python
enumeration with machine floats and int bit tricks, no shared code paths
with the library internals being tested.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from spincss.hypergraph import Hypergraph


def random_hypergraph(rng: random.Random, max_vertices: int, max_edges: int) -> Hypergraph:
    """Random hypergraph with no isolated vertices (so the dual exists)."""
    k = rng.randint(1, max_vertices)
    n = rng.randint(1, max_edges)
    while True:
        edges = []
        for _ in range(n):
            size = rng.randint(1, k)
            edges.append(tuple(sorted(rng.sample(range(k), size))))
        covered = set(v for e in edges for v in e)
        if len(covered) == k:
            return Hypergraph(k, edges)


def brute_partition(h: Hypergraph, couplings, beta: float) -> float:
    """Sum exp(-beta * E) over all 2^k sign assignments, E = sum J_m prod(s)."""
    k = h.num_vertices
    total = 0.0
    for bits in range(1 << k):
        e = 0.0
        for m, edge in enumerate(h.edges):
            prod = 1
            for v in edge:
                prod = -prod if (bits >> v) & 1 else prod
            e += couplings[m] * prod
        total += math.exp(-beta * e)
    return total


def brute_span_words(generator_words, n_bits: int) -> list[int]:
    """All XOR combinations of the generators, deduplicated."""
    seen = {0}
    for r in range(1, len(generator_words) + 1):
        for combo in itertools.combinations(generator_words, r):
            w = 0
            for g in combo:
                w ^= g
            seen.add(w)
    del n_bits  # kept in the signature for call-site clarity
    return sorted(seen)


def brute_weight_distribution(generator_words, n_bits: int) -> dict[int, int]:
    dist: dict[int, int] = {}
    for w in brute_span_words(generator_words, n_bits):
        c = bin(w).count("1")
        dist[c] = dist.get(c, 0) + 1
    return dist


def product_state_vector(factors) -> np.ndarray:
    """Dense product vector with qubit i on index bit i (little-endian)."""
    acc = np.array([1.0])
    for f in factors:
        acc = np.kron(np.asarray(f, dtype=float), acc)
    return acc


def brute_even_covers(h: Hypergraph) -> list[int]:
    """Edge subsets (as bitmasks) covering every vertex an even number of times."""
    out = []
    for mask in range(1 << h.num_edges):
        parity = [0] * h.num_vertices
        for m in range(h.num_edges):
            if (mask >> m) & 1:
                for v in h.edges[m]:
                    parity[v] ^= 1
        if not any(parity):
            out.append(mask)
    return out
