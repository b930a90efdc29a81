"""Generators for the named model families.

Periodic graphs (cycles, square and cubic tori), the star construction that
puts qubits on graph edges with one hyperedge per vertex, and the honeycomb
lattice on a torus whose faces become 6-body hyperedges.  All index
orderings are row-major so generated structures are byte-stable.

The honeycomb construction is validation-first: rather than hard-coding
which torus sizes work, it builds the faces, searches for a proper
3-coloring of the face-adjacency graph, and refuses (NotThreeColorableError)
when none exists.  Sizes that are multiples of 3 in both directions admit
the straight (x + 2y) mod 3 coloring; the search discovers that case too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IsolatedVertexError, NotThreeColorableError
from .hypergraph import Hypergraph
from .spins import SpinModel


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph: parallel edges allowed, self-loops not."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, num_vertices: int, edges: Iterable[tuple[int, int]]):
        if num_vertices < 0:
            raise ValueError(f"num_vertices must be nonnegative, got {num_vertices}")
        normalized = []
        for i, (a, b) in enumerate(edges):
            if a == b:
                raise ValueError(f"edge {i} is a self-loop at vertex {a}")
            if not (0 <= a < num_vertices and 0 <= b < num_vertices):
                raise ValueError(f"edge {i} has an endpoint outside [0, {num_vertices})")
            normalized.append((min(a, b), max(a, b)))
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def as_hypergraph(self) -> Hypergraph:
        """The same structure with every edge read as a 2-element hyperedge."""
        return Hypergraph(self.num_vertices, self.edges)


def cycle_graph(n: int) -> Graph:
    """n-cycle; n = 2 degenerates to a double bond."""
    if n < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def square_torus(lx: int, ly: int) -> Graph:
    """Square lattice with periodic wrap: lx*ly vertices, 2*lx*ly edges."""
    if lx < 2 or ly < 2:
        raise ValueError(f"torus sides must be >= 2, got {lx}x{ly}")
    idx = lambda x, y: (x % lx) * ly + (y % ly)
    edges = []
    for x in range(lx):
        for y in range(ly):
            edges.append((idx(x, y), idx(x + 1, y)))
            edges.append((idx(x, y), idx(x, y + 1)))
    return Graph(lx * ly, edges)


def cubic_torus(l: int) -> Graph:
    """Cubic lattice with periodic wrap: l**3 vertices, 3*l**3 edges."""
    if l < 2:
        raise ValueError(f"torus side must be >= 2, got {l}")
    idx = lambda x, y, z: ((x % l) * l + (y % l)) * l + (z % l)
    edges = []
    for x in range(l):
        for y in range(l):
            for z in range(l):
                edges.append((idx(x, y, z), idx(x + 1, y, z)))
                edges.append((idx(x, y, z), idx(x, y + 1, z)))
                edges.append((idx(x, y, z), idx(x, y, z + 1)))
    return Graph(l**3, edges)


def toric_code_hypergraph(g: Graph) -> Hypergraph:
    """Qubits on the edges of g; one hyperedge per vertex, its incident edges.

    The dual of the result is g itself read as a 2-uniform hypergraph: each
    qubit's two containing stars are exactly the edge's endpoints.
    """
    stars: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for q, (a, b) in enumerate(g.edges):
        stars[a].append(q)
        stars[b].append(q)
    for v, star in enumerate(stars):
        if not star:
            raise IsolatedVertexError(v)
    return Hypergraph(g.num_edges, stars)


def ising_model(g: Graph, j: float, beta: float) -> SpinModel:
    """Pairwise model on the graph with one shared coupling."""
    return SpinModel(g.as_hypergraph(), [j] * g.num_edges, beta)


def _honeycomb_faces(lx: int, ly: int) -> list[tuple[int, ...]]:
    """Hexagonal faces of the honeycomb torus, row-major, as vertex tuples.

    Unit cell (x, y) holds two sites, A = 2*(x*ly + y) and B = A + 1; A
    bonds to B in its own cell and to the B sites below and to the left, so
    each face walks A(x,y) B(x,y) A(x+1,y) B(x+1,y-1) A(x+1,y-1) B(x,y-1).
    """
    a = lambda x, y: 2 * ((x % lx) * ly + (y % ly))
    b = lambda x, y: 2 * ((x % lx) * ly + (y % ly)) + 1
    faces = []
    for x in range(lx):
        for y in range(ly):
            faces.append(
                (a(x, y), b(x, y), a(x + 1, y), b(x + 1, y - 1), a(x + 1, y - 1), b(x, y - 1))
            )
    return faces


def _three_color(adjacency: list[set[int]]) -> list[int] | None:
    """Backtracking proper 3-coloring; None when there is none."""
    n = len(adjacency)
    colors = [-1] * n
    def place(i: int) -> bool:
        if i == n:
            return True
        used = {colors[nb] for nb in adjacency[i] if colors[nb] >= 0}
        for c in range(3):
            if c not in used:
                colors[i] = c
                if place(i + 1):
                    return True
        colors[i] = -1
        return False
    return colors if place(0) else None


def _validated_faces_and_colors(lx: int, ly: int) -> tuple[list[tuple[int, ...]], list[int]]:
    if lx < 2 or ly < 2:
        raise ValueError(f"torus sides must be >= 2, got {lx}x{ly}")
    faces = _honeycomb_faces(lx, ly)
    adjacency: list[set[int]] = [set() for _ in faces]
    for i in range(len(faces)):
        for k in range(i + 1, len(faces)):
            if set(faces[i]) & set(faces[k]):
                adjacency[i].add(k)
                adjacency[k].add(i)
    colors = _three_color(adjacency)
    if colors is None:
        raise NotThreeColorableError(
            f"honeycomb torus {lx}x{ly} admits no proper face 3-coloring"
        )
    return faces, colors


def hexagonal_2colex(lx: int, ly: int) -> Hypergraph:
    """Honeycomb torus as a hypergraph: 2*lx*ly qubits, lx*ly 6-body faces.

    Every qubit lies in exactly 3 faces, so the dual is a triangular lattice
    of 3-body hyperedges.  Only sizes whose faces are properly 3-colorable
    are accepted.
    """
    faces, _ = _validated_faces_and_colors(lx, ly)
    return Hypergraph(2 * lx * ly, faces)


def hexagonal_2colex_face_colors(lx: int, ly: int) -> list[int]:
    """A proper 3-coloring of the faces, indexed like the hyperedges."""
    _, colors = _validated_faces_and_colors(lx, ly)
    return colors
