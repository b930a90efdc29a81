"""Gray-code enumeration kernels compiled with numba.

Same call signatures and semantics as the pure-numpy module; see its
docstring for the conventions.  Each kernel walks its index set in Gray
order so one step touches a single spin or generator, updating the running
energy incrementally.  At block boundaries the energy is recomputed from
the current state to stop floating-point drift from accumulating across
millions of increments.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BLOCK = 1 << 16

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_S56 = np.uint64(56)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True)
def _mask_bits_csr(masks, n_bits):
    """CSR layout of the set bit positions of each mask."""
    n = masks.shape[0]
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        indptr[i + 1] = indptr[i] + _popcount64(masks[i])
    bits = np.zeros(indptr[n], dtype=np.uint64)
    for i in range(n):
        k = indptr[i]
        for b in range(n_bits):
            if (masks[i] >> np.uint64(b)) & _U1 != _U0:
                bits[k] = np.uint64(b)
                k += 1
    return indptr, bits


@njit(cache=True)
def partition_partials(edge_masks, couplings, beta, n_spins, shift):
    """Per-block sums of exp(-beta*E - shift) over all 2**n_spins spin states.

    E(config) = sum_m couplings[m] * (-1)**popcount(config & edge_masks[m]).
    """
    n_edges = edge_masks.shape[0]
    # vertex -> incident edges, CSR layout; a Gray step flips one vertex
    deg = np.zeros(n_spins, dtype=np.int64)
    for m in range(n_edges):
        for v in range(n_spins):
            if (edge_masks[m] >> np.uint64(v)) & _U1 != _U0:
                deg[v] += 1
    indptr = np.zeros(n_spins + 1, dtype=np.int64)
    for v in range(n_spins):
        indptr[v + 1] = indptr[v] + deg[v]
    incident = np.zeros(indptr[n_spins], dtype=np.int64)
    fill = indptr[:n_spins].copy()
    for m in range(n_edges):
        for v in range(n_spins):
            if (edge_masks[m] >> np.uint64(v)) & _U1 != _U0:
                incident[fill[v]] = m
                fill[v] += 1

    sign = np.ones(n_edges)
    energy = 0.0
    for m in range(n_edges):
        energy += couplings[m]

    total = np.int64(1) << np.int64(n_spins)
    n_blocks = (total + BLOCK - 1) // BLOCK
    partials = np.zeros(n_blocks)
    config = _U0
    acc = np.exp(-beta * energy - shift)
    for t in range(1, total):
        v = 0
        while not (t >> v) & 1:
            v += 1
        config ^= _U1 << np.uint64(v)
        for k in range(indptr[v], indptr[v + 1]):
            m = incident[k]
            energy -= 2.0 * couplings[m] * sign[m]
            sign[m] = -sign[m]
        acc += np.exp(-beta * energy - shift)
        if (t + 1) & (BLOCK - 1) == 0:
            partials[t >> 16] = acc
            acc = 0.0
            energy = 0.0
            for m in range(n_edges):
                if _popcount64(config & edge_masks[m]) & 1:
                    sign[m] = -1.0
                else:
                    sign[m] = 1.0
                energy += couplings[m] * sign[m]
    if total & (BLOCK - 1) != 0:
        partials[n_blocks - 1] = acc
    return partials


@njit(cache=True)
def partition_max_exponent(edge_masks, couplings, beta, n_spins):
    """max over spin states of -beta*E, the exact shift for log-domain sums."""
    n_edges = edge_masks.shape[0]
    sign = np.ones(n_edges)
    energy = 0.0
    for m in range(n_edges):
        energy += couplings[m]
    e_min = energy
    e_max = energy
    total = np.int64(1) << np.int64(n_spins)
    for t in range(1, total):
        v = 0
        while not (t >> v) & 1:
            v += 1
        vbit = _U1 << np.uint64(v)
        for m in range(n_edges):
            if edge_masks[m] & vbit != _U0:
                energy -= 2.0 * couplings[m] * sign[m]
                sign[m] = -sign[m]
        if energy < e_min:
            e_min = energy
        elif energy > e_max:
            e_max = energy
    return max(-beta * e_min, -beta * e_max)


@njit(cache=True)
def span_exp_partials(gen_masks, couplings, beta, shift):
    """Per-block sums of exp(-beta*E - shift) over the span of gen_masks.

    E(g) = sum_m couplings[m] * (+1 if bit m of g is clear, else -1).
    """
    r = gen_masks.shape[0]
    n_bits = couplings.shape[0]
    indptr, bits = _mask_bits_csr(gen_masks, n_bits)

    energy = 0.0
    for m in range(n_bits):
        energy += couplings[m]

    total = np.int64(1) << np.int64(r)
    n_blocks = (total + BLOCK - 1) // BLOCK
    partials = np.zeros(n_blocks)
    g = _U0
    acc = np.exp(-beta * energy - shift)
    for t in range(1, total):
        b = 0
        while not (t >> b) & 1:
            b += 1
        for k in range(indptr[b], indptr[b + 1]):
            m = bits[k]
            if (g >> m) & _U1 != _U0:
                energy += 2.0 * couplings[m]
            else:
                energy -= 2.0 * couplings[m]
        g ^= gen_masks[b]
        acc += np.exp(-beta * energy - shift)
        if (t + 1) & (BLOCK - 1) == 0:
            partials[t >> 16] = acc
            acc = 0.0
            energy = 0.0
            for m in range(n_bits):
                if (g >> np.uint64(m)) & _U1 != _U0:
                    energy -= couplings[m]
                else:
                    energy += couplings[m]
    if total & (BLOCK - 1) != 0:
        partials[n_blocks - 1] = acc
    return partials


@njit(cache=True)
def span_max_exponent(gen_masks, couplings, beta):
    """max over the span of gen_masks of -beta*E."""
    r = gen_masks.shape[0]
    n_bits = couplings.shape[0]
    indptr, bits = _mask_bits_csr(gen_masks, n_bits)
    energy = 0.0
    for m in range(n_bits):
        energy += couplings[m]
    e_min = energy
    e_max = energy
    g = _U0
    total = np.int64(1) << np.int64(r)
    for t in range(1, total):
        b = 0
        while not (t >> b) & 1:
            b += 1
        for k in range(indptr[b], indptr[b + 1]):
            m = bits[k]
            if (g >> m) & _U1 != _U0:
                energy += 2.0 * couplings[m]
            else:
                energy -= 2.0 * couplings[m]
        g ^= gen_masks[b]
        if energy < e_min:
            e_min = energy
        elif energy > e_max:
            e_max = energy
    return max(-beta * e_min, -beta * e_max)


@njit(cache=True)
def weight_tally(gen_masks, n_bits):
    """Histogram of popcounts over the span of gen_masks; length n_bits + 1."""
    r = gen_masks.shape[0]
    counts = np.zeros(n_bits + 1, dtype=np.int64)
    g = _U0
    counts[0] += 1
    total = np.int64(1) << np.int64(r)
    for t in range(1, total):
        b = 0
        while not (t >> b) & 1:
            b += 1
        g ^= gen_masks[b]
        counts[_popcount64(g)] += 1
    return counts
