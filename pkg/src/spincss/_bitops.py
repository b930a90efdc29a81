"""Bit-level helpers shared by the pure-numpy kernel path."""

from __future__ import annotations

import numpy as np

if hasattr(np, "bitwise_count"):

    def popcount_u64(a: np.ndarray) -> np.ndarray:
        """Per-element popcount of a uint64 array."""
        return np.bitwise_count(a).astype(np.int64)

else:
    _BYTE_COUNTS = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def popcount_u64(a: np.ndarray) -> np.ndarray:
        """Per-element popcount of a uint64 array."""
        a = np.ascontiguousarray(a, dtype=np.uint64)
        per_byte = _BYTE_COUNTS[a.view(np.uint8).reshape(a.shape + (8,))]
        return per_byte.sum(axis=-1, dtype=np.int64)


def span_masks(gen_masks: np.ndarray) -> np.ndarray:
    """All 2**R XOR combinations of R generator masks.

    Element i is the XOR of the generators selected by the bits of i, so the
    array is built by doubling: each new generator XORs the prefix built so
    far.  Caller is responsible for keeping R small enough to materialize.
    """
    gen = np.asarray(gen_masks, dtype=np.uint64)
    out = np.zeros(1 << len(gen), dtype=np.uint64)
    for b in range(len(gen)):
        out[1 << b : 2 << b] = out[: 1 << b] ^ gen[b]
    return out
