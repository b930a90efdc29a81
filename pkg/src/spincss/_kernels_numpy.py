"""Pure-numpy enumeration kernels.

Same call signatures and semantics as the accelerated module, so either can
sit behind :mod:`spincss.backend`.  Work is chunked so peak memory stays at
a few megabytes even at the largest supported enumeration sizes.

All three kernels sum over exponentially large index sets:

- ``partition_partials``: every assignment of ``n_spins`` binary spins,
  where bit ``i`` of the configuration index set means spin ``i`` is down.
- ``span_exp_partials`` / ``weight_tally``: every element of the XOR span
  of the given (independent) generator masks.

Energy convention shared with the accelerated module: a term's coupling
enters with sign +1 when its parity bit is clear and -1 when set, and the
summand is ``exp(-beta * energy - shift)``.  The caller picks ``shift`` and
undoes it afterwards; partial sums are returned so the caller can finish
with pairwise summation.
"""

from __future__ import annotations

import numpy as np

from ._bitops import popcount_u64, span_masks

BLOCK = 1 << 16
_CHUNK_GENS = 16


def _coupling_sums(masks: np.ndarray, couplings: np.ndarray) -> np.ndarray:
    """out[i] = sum of couplings over the set bits of masks[i]."""
    out = np.zeros(masks.shape, dtype=np.float64)
    one = np.uint64(1)
    for m in range(len(couplings)):
        out += ((masks >> np.uint64(m)) & one) * couplings[m]
    return out


def partition_partials(
    edge_masks: np.ndarray,
    couplings: np.ndarray,
    beta: float,
    n_spins: int,
    shift: float,
) -> np.ndarray:
    """Per-block sums of exp(-beta*E - shift) over all 2**n_spins spin states.

    E(config) = sum_m couplings[m] * (-1)**popcount(config & edge_masks[m]).
    """
    edge_masks = np.asarray(edge_masks, dtype=np.uint64)
    couplings = np.asarray(couplings, dtype=np.float64)
    total = 1 << n_spins
    n_blocks = (total + BLOCK - 1) // BLOCK
    partials = np.zeros(n_blocks)
    for blk in range(n_blocks):
        lo = blk * BLOCK
        configs = np.arange(lo, min(lo + BLOCK, total), dtype=np.uint64)
        energy = np.zeros(len(configs))
        for m in range(len(edge_masks)):
            parity = popcount_u64(configs & edge_masks[m]) & 1
            energy += couplings[m] * (1.0 - 2.0 * parity)
        partials[blk] = np.sum(np.exp(-beta * energy - shift))
    return partials


def partition_max_exponent(
    edge_masks: np.ndarray,
    couplings: np.ndarray,
    beta: float,
    n_spins: int,
) -> float:
    """max over spin states of -beta*E, the exact shift for log-domain sums."""
    edge_masks = np.asarray(edge_masks, dtype=np.uint64)
    couplings = np.asarray(couplings, dtype=np.float64)
    total = 1 << n_spins
    best = -np.inf
    for lo in range(0, total, BLOCK):
        configs = np.arange(lo, min(lo + BLOCK, total), dtype=np.uint64)
        energy = np.zeros(len(configs))
        for m in range(len(edge_masks)):
            parity = popcount_u64(configs & edge_masks[m]) & 1
            energy += couplings[m] * (1.0 - 2.0 * parity)
        best = max(best, float(np.max(-beta * energy)))
    return best


def span_exp_partials(
    gen_masks: np.ndarray,
    couplings: np.ndarray,
    beta: float,
    shift: float,
) -> np.ndarray:
    """Per-chunk sums of exp(-beta*E - shift) over the span of gen_masks.

    E(g) = sum_m couplings[m] * (+1 if bit m of g is clear, else -1).
    """
    gen_masks = np.asarray(gen_masks, dtype=np.uint64)
    couplings = np.asarray(couplings, dtype=np.float64)
    j_total = float(np.sum(couplings))
    low = span_masks(gen_masks[:_CHUNK_GENS])
    high = span_masks(gen_masks[_CHUNK_GENS:])
    partials = np.zeros(len(high))
    for i in range(len(high)):
        chunk = low ^ high[i]
        energy = j_total - 2.0 * _coupling_sums(chunk, couplings)
        partials[i] = np.sum(np.exp(-beta * energy - shift))
    return partials


def span_max_exponent(
    gen_masks: np.ndarray,
    couplings: np.ndarray,
    beta: float,
) -> float:
    """max over the span of gen_masks of -beta*E."""
    gen_masks = np.asarray(gen_masks, dtype=np.uint64)
    couplings = np.asarray(couplings, dtype=np.float64)
    j_total = float(np.sum(couplings))
    low = span_masks(gen_masks[:_CHUNK_GENS])
    high = span_masks(gen_masks[_CHUNK_GENS:])
    best = -np.inf
    for i in range(len(high)):
        energy = j_total - 2.0 * _coupling_sums(low ^ high[i], couplings)
        best = max(best, float(np.max(-beta * energy)))
    return best


def weight_tally(gen_masks: np.ndarray, n_bits: int) -> np.ndarray:
    """Histogram of popcounts over the span of gen_masks; length n_bits + 1."""
    gen_masks = np.asarray(gen_masks, dtype=np.uint64)
    low = span_masks(gen_masks[:_CHUNK_GENS])
    high = span_masks(gen_masks[_CHUNK_GENS:])
    counts = np.zeros(n_bits + 1, dtype=np.int64)
    for i in range(len(high)):
        weights = popcount_u64(low ^ high[i])
        counts += np.bincount(weights, minlength=n_bits + 1)
    return counts
