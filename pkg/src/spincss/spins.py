"""Classical spin Hamiltonians on hypergraphs and exact partition functions.

Spins live on vertices, interactions on edges.  The energy convention is
``E = sum_m J_m * prod(s_i for i in edge m)`` with Boltzmann weight
``exp(-beta * E)``, so ferromagnetic order corresponds to negative J.

The partition function is computed two independent ways:

- ``partition_function``: brute force over all 2**K spin assignments.
- ``partition_function_edge_vars``: sum over the image of the map sending a
  spin assignment to its tuple of edge products.  That image is the GF(2)
  column space of the incidence matrix (2**M points, M the incidence rank),
  and the map is exactly 2**(K-M)-to-1, so the image sum picks up that
  multiplicity.  Keeping both routes separate is the point: they cross-check
  each other and later the group-overlap route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import backend
from .errors import CapacityError
from .gf2 import BitMatrix, BitVector, _rref
from .hypergraph import Hypergraph, edge_matrix

PARTITION_MAX_SPINS = 24
EDGE_ENUM_MAX_EDGES = 20

# exp(-beta*E) stays within double range below this; above it, sums run in
# the log domain around the exact maximum exponent
_LOG_SHIFT_THRESHOLD = 600.0

# per-vertex spin values in {+1, -1}, one per vertex
SpinConfig = Sequence[int]


@dataclass(frozen=True)
class SpinModel:
    """A hypergraph, one real coupling per edge, and an inverse temperature."""

    h: Hypergraph
    couplings: tuple[float, ...]
    beta: float

    def __init__(self, h: Hypergraph, couplings: Sequence[float], beta: float):
        couplings = tuple(float(j) for j in couplings)
        if len(couplings) != h.num_edges:
            raise ValueError(
                f"{len(couplings)} couplings for {h.num_edges} edges"
            )
        beta = float(beta)
        if not beta >= 0.0:
            raise ValueError(f"beta must be >= 0, got {beta}")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "couplings", couplings)
        object.__setattr__(self, "beta", beta)


def energy(m: SpinModel, s: SpinConfig) -> float:
    """Energy of one spin assignment: sum_m J_m * prod(s_i, i in edge m)."""
    s = tuple(s)
    if len(s) != m.h.num_vertices:
        raise ValueError(
            f"config has {len(s)} spins, model has {m.h.num_vertices} vertices"
        )
    for i, v in enumerate(s):
        if v not in (1, -1):
            raise ValueError(f"spin {i} is {v}, expected +1 or -1")
    total = 0.0
    for j, e in zip(m.couplings, m.h.edges):
        prod = 1
        for i in e:
            prod *= s[i]
        total += j * prod
    return total


def _edge_word_array(h: Hypergraph) -> np.ndarray:
    words = [BitVector.from_support(h.num_vertices, e).word for e in h.edges]
    return np.array(words, dtype=np.uint64)


def _finish(partials: np.ndarray, shift: float) -> float:
    total = float(np.sum(partials))
    if shift == 0.0:
        return total
    return math.exp(math.log(total) + shift)


def partition_function(m: SpinModel) -> float:
    """Z = sum over all 2**K spin assignments of exp(-beta * energy).

    Exact brute force; the independent reference every other route is held
    against.
    """
    k = m.h.num_vertices
    if k > PARTITION_MAX_SPINS:
        raise CapacityError(
            f"{k} spins exceeds the 2**{PARTITION_MAX_SPINS} enumeration limit"
        )
    masks = _edge_word_array(m.h)
    couplings = np.asarray(m.couplings, dtype=np.float64)
    shift = 0.0
    if m.beta * float(np.sum(np.abs(couplings))) > _LOG_SHIFT_THRESHOLD:
        shift = backend.partition_max_exponent(masks, couplings, m.beta, k)
    partials = backend.partition_partials(masks, couplings, m.beta, k, shift)
    return _finish(partials, shift)


def partition_function_edge_vars(m: SpinModel) -> float:
    """Z recomputed by summing over realizable edge-sign patterns.

    A spin assignment induces one sign per edge; the set of realizable sign
    patterns (as GF(2) vectors, bit m set meaning edge m negative) is the
    span of the incidence columns.  Each pattern is realized by exactly
    2**(K-M) assignments, so Z is that multiplicity times the span sum.
    """
    n = m.h.num_edges
    if n > EDGE_ENUM_MAX_EDGES:
        raise CapacityError(
            f"{n} edges exceeds the 2**{EDGE_ENUM_MAX_EDGES} enumeration limit"
        )
    columns = edge_matrix(m.h).transpose()
    gen_words, _ = _rref(columns.words(), n)
    gens = np.array(gen_words, dtype=np.uint64)
    couplings = np.asarray(m.couplings, dtype=np.float64)
    shift = 0.0
    if m.beta * float(np.sum(np.abs(couplings))) > _LOG_SHIFT_THRESHOLD:
        shift = backend.span_max_exponent(gens, couplings, m.beta)
    partials = backend.span_exp_partials(gens, couplings, m.beta, shift)
    multiplicity = 1 << (m.h.num_vertices - len(gen_words))
    return multiplicity * _finish(partials, shift)