"""CSS stabilizer states attached to a hypergraph.

Qubits sit on the vertices.  A maximal independent subset of edge vectors
becomes the X-type generators; the orthogonal hypergraph's edges become the
Z-type generators.  Because the two types never mix, every group element is
just a GF(2) support vector and no symplectic bookkeeping is needed.

Construction does not force the commutation invariants: ``verify_stabilized``
exists precisely to detect a state whose generators fail them, so a
hand-built bad state must be constructible.  States made by
``css_from_hypergraph`` always satisfy them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from ._bitops import span_masks
from .errors import CapacityError
from .gf2 import BitVector, independent_row_indices
from .hypergraph import Hypergraph, edge_matrix, orthogonal

WEIGHT_ENUM_MAX_RANK = 26
STATEVECTOR_MAX_QUBITS = 20

# weight -> count of group elements with that support size
WeightDistribution = dict[int, int]


@dataclass(frozen=True)
class CssState:
    """Stabilizer data: the hypergraph plus X- and Z-type generator vectors."""

    g: Hypergraph
    x_generators: tuple[BitVector, ...]
    z_generators: tuple[BitVector, ...]

    def __post_init__(self):
        for gen in self.x_generators + self.z_generators:
            if gen.length != self.g.num_vertices:
                raise ValueError(
                    f"generator length {gen.length} does not match "
                    f"{self.g.num_vertices} qubits"
                )

    @property
    def n_qubits(self) -> int:
        return self.g.num_vertices

    @property
    def x_rank(self) -> int:
        return len(self.x_generators)


def css_from_hypergraph(g: Hypergraph) -> CssState:
    """Build the CSS state of a hypergraph.

    X-generators are the edge vectors of the first maximal independent edge
    subset (scan order); Z-generators are the orthogonal hypergraph's edges.
    Every X-generator then meets every Z-generator evenly, so all generators
    commute and the state they fix is well defined.
    """
    m = edge_matrix(g)
    keep = independent_row_indices(m)
    x_gens = tuple(m.rows[i] for i in keep)
    z_gens = tuple(
        BitVector.from_support(g.num_vertices, e) for e in orthogonal(g).edges
    )
    return CssState(g, x_gens, z_gens)


def _tally(generators: tuple[BitVector, ...], n_bits: int, label: str) -> WeightDistribution:
    if len(generators) > WEIGHT_ENUM_MAX_RANK:
        raise CapacityError(
            f"{len(generators)} {label} generators exceeds the "
            f"2**{WEIGHT_ENUM_MAX_RANK} enumeration limit"
        )
    masks = np.array([gen.word for gen in generators], dtype=np.uint64)
    counts = backend.weight_tally(masks, n_bits)
    return {w: int(c) for w, c in enumerate(counts) if c}


def x_weight_distribution(c: CssState) -> WeightDistribution:
    """Support-size counts over all 2**x_rank X-group elements."""
    return _tally(c.x_generators, c.n_qubits, "X")


def z_weight_distribution(c: CssState) -> WeightDistribution:
    """Support-size counts over all Z-group elements."""
    return _tally(c.z_generators, c.n_qubits, "Z")


def statevector(c: CssState) -> np.ndarray:
    """Dense amplitudes over 2**n_qubits basis states, qubit i = index bit i.

    Uniform weight 2**(-x_rank/2) on the X-group orbit of the all-zeros
    string, zero elsewhere.  Used as the small-size oracle against which the
    enumeration routes are checked.
    """
    n = c.n_qubits
    if n > STATEVECTOR_MAX_QUBITS:
        raise CapacityError(
            f"{n} qubits exceeds the 2**{STATEVECTOR_MAX_QUBITS} dense limit"
        )
    masks = span_masks(np.array([gen.word for gen in c.x_generators], dtype=np.uint64))
    amps = np.zeros(1 << n)
    amps[masks] = 2.0 ** (-len(c.x_generators) / 2.0)
    return amps


def verify_stabilized(c: CssState) -> bool:
    """True iff the dense statevector is fixed by every listed generator.

    An X-generator permutes amplitudes by XOR of its mask; a Z-generator
    flips the sign wherever the basis index meets its mask oddly.  Exact
    comparison: a fixed vector is reproduced bit for bit.
    """
    n = c.n_qubits
    if n > STATEVECTOR_MAX_QUBITS:
        raise CapacityError(
            f"{n} qubits exceeds the 2**{STATEVECTOR_MAX_QUBITS} dense limit"
        )
    amps = statevector(c)
    indices = np.arange(1 << n, dtype=np.uint64)
    for gen in c.x_generators:
        if not np.array_equal(amps[indices ^ np.uint64(gen.word)], amps):
            return False
    for gen in c.z_generators:
        parity = np.zeros(1 << n, dtype=np.int64)
        for b in gen.support():
            parity ^= ((indices >> np.uint64(b)) & np.uint64(1)).astype(np.int64)
        signs = 1.0 - 2.0 * parity
        if not np.array_equal(signs * amps, amps):
            return False
    return True
