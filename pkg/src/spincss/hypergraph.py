"""Hypergraphs and the structural constructions the rest of the package rests on.

A hypergraph here is a vertex count plus an ordered list of non-empty vertex
sets; repeated edges are legal and kept as separate entries (periodic
lattices produce parallel bonds).  Three constructions matter:

- ``dual``: swap the roles of vertices and edges, i.e. transpose the
  incidence matrix.
- ``orthogonal``: a hypergraph on the same vertices whose edge vectors span
  the GF(2) null space of the incidence rows, so every orthogonal edge meets
  every original edge an even number of times.
- ``constraint_space_bruteforce``: by direct enumeration, a basis of all
  edge subsets covering every vertex an even number of times.  Kept naive on
  purpose: it is the independent check that such subsets correspond exactly
  to the orthogonal construction on the dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, IsolatedVertexError
from .gf2 import BitMatrix, BitVector, _rref, null_space_basis

CONSTRAINT_ENUM_MAX_EDGES = 20


def _normalize_edge(edge: tuple[int, ...], num_vertices: int, position: int) -> tuple[int, ...]:
    members = sorted(set(edge))
    if not members:
        raise ValueError(f"edge {position} is empty")
    if len(members) != len(edge):
        raise ValueError(f"edge {position} lists a vertex twice")
    if members[0] < 0 or members[-1] >= num_vertices:
        raise ValueError(
            f"edge {position} has a vertex outside [0, {num_vertices})"
        )
    return tuple(members)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph: ``num_vertices`` and an ordered tuple of edges."""

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, num_vertices: int, edges: Iterable[Iterable[int]]):
        if num_vertices < 0:
            raise ValueError(f"num_vertices must be nonnegative, got {num_vertices}")
        normalized = tuple(
            _normalize_edge(tuple(e), num_vertices, i) for i, e in enumerate(edges)
        )
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", normalized)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertex_degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg


def edge_matrix(h: Hypergraph) -> BitMatrix:
    """Incidence rows: row m has bit v set iff vertex v belongs to edge m."""
    rows = tuple(
        BitVector.from_support(h.num_vertices, e) for e in h.edges
    )
    return BitMatrix(rows, h.num_vertices)


def dual(h: Hypergraph) -> Hypergraph:
    """Swap vertices and edges: vertex m of the dual is edge m of h, and
    dual edge i collects the edges of h containing vertex i.

    Equivalent to transposing the incidence matrix, so dual(dual(h)) is h
    exactly (labels included).  Isolated vertices are rejected because they
    would turn into empty edges.
    """
    incident: list[list[int]] = [[] for _ in range(h.num_vertices)]
    for m, e in enumerate(h.edges):
        for v in e:
            incident[v].append(m)
    for v, edges_at_v in enumerate(incident):
        if not edges_at_v:
            raise IsolatedVertexError(v)
    return Hypergraph(h.num_edges, incident)


def orthogonal(h: Hypergraph) -> Hypergraph:
    """Hypergraph on the same vertices whose edges span everything meeting
    each edge of h an even number of times.

    Edges are the canonical null-space basis of the incidence rows, so there
    are exactly num_vertices - rank of them, always independent.  Empty when
    the incidence rows have full column rank.
    """
    basis = null_space_basis(edge_matrix(h))
    return Hypergraph(h.num_vertices, [v.support() for v in basis])


def constraint_space_bruteforce(h: Hypergraph) -> list[tuple[int, ...]]:
    """Basis of all edge subsets covering every vertex an even number of times.

    Every subset of [0, num_edges) is tried explicitly, XOR-folding the edge
    vectors; the surviving subsets form a GF(2) subspace and are reduced to
    canonical echelon form.  Returned as sorted edge-index tuples.
    """
    n = h.num_edges
    if n > CONSTRAINT_ENUM_MAX_EDGES:
        raise CapacityError(
            f"{n} edges exceeds the 2**{CONSTRAINT_ENUM_MAX_EDGES} enumeration limit"
        )
    edge_words = [BitVector.from_support(h.num_vertices, e).word for e in h.edges]
    even_covers = []
    # Gray-code walk: step t toggles one edge in the running XOR of vectors
    cover = 0
    gray = 0
    for t in range(1, 1 << n):
        b = (t & -t).bit_length() - 1
        cover ^= edge_words[b]
        gray ^= 1 << b
        if cover == 0:
            even_covers.append(gray)
    rows, _ = _rref(even_covers, n)
    return [BitVector(n, w).support() for w in rows]


def labeled_equal(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Same vertex count and same multiset of edges, insensitive to order."""
    return h1.num_vertices == h2.num_vertices and sorted(h1.edges) == sorted(h2.edges)
