import pytest

from spincss.errors import NotThreeColorableError
from spincss.hypergraph import dual, labeled_equal
from spincss.zoo import (
    Graph,
    cubic_torus,
    cycle_graph,
    hexagonal_2colex,
    hexagonal_2colex_face_colors,
    ising_model,
    square_torus,
    toric_code_hypergraph,
)


def test_graph_validation():
    g = Graph(3, [(2, 0), (1, 2)])
    assert g.edges == ((0, 2), (1, 2))
    with pytest.raises(ValueError, match="self-loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="endpoint"):
        Graph(3, [(0, 3)])


def test_cycle_graph():
    g = cycle_graph(5)
    assert g.num_vertices == 5 and g.num_edges == 5
    assert g.edges[-1] == (0, 4)
    assert cycle_graph(2).edges == ((0, 1), (0, 1))
    with pytest.raises(ValueError):
        cycle_graph(1)


def test_square_torus_counts():
    g = square_torus(3, 4)
    assert g.num_vertices == 12 and g.num_edges == 24
    degrees = [0] * g.num_vertices
    for a, b in g.edges:
        degrees[a] += 1
        degrees[b] += 1
    assert degrees == [4] * 12
    with pytest.raises(ValueError):
        square_torus(1, 3)


def test_cubic_torus_counts():
    g = cubic_torus(2)
    assert g.num_vertices == 8 and g.num_edges == 24
    degrees = [0] * 8
    for a, b in g.edges:
        degrees[a] += 1
        degrees[b] += 1
    assert degrees == [6] * 8
    with pytest.raises(ValueError):
        cubic_torus(1)


def test_toric_code_star_structure():
    g = square_torus(2, 2)
    h = toric_code_hypergraph(g)
    assert h.num_vertices == g.num_edges  # qubits on the edges
    assert h.num_edges == g.num_vertices  # one star per vertex
    assert all(len(e) == 4 for e in h.edges)
    assert all(d == 2 for d in h.vertex_degrees())  # each edge joins 2 stars


@pytest.mark.parametrize(
    "g",
    [
        cycle_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        square_torus(2, 2),
        square_torus(3, 3),
        cubic_torus(2),
    ],
    ids=["c3", "c4", "c5", "c6", "sq22", "sq33", "cube2"],
)
def test_toric_duality_correspondence(g):
    assert labeled_equal(dual(toric_code_hypergraph(g)), g.as_hypergraph())


def test_ising_model_builder():
    m = ising_model(cycle_graph(4), 1.5, 0.3)
    assert m.couplings == (1.5, 1.5, 1.5, 1.5)
    assert m.beta == 0.3
    assert m.h.num_vertices == 4


def test_honeycomb_2colex_structure():
    h = hexagonal_2colex(3, 3)
    assert h.num_vertices == 18
    assert h.num_edges == 9
    assert all(len(e) == 6 for e in h.edges)
    # every vertex lies on exactly 3 faces
    assert h.vertex_degrees() == [3] * 18


def test_honeycomb_face_coloring():
    h = hexagonal_2colex(3, 3)
    colors = hexagonal_2colex_face_colors(3, 3)
    assert len(colors) == h.num_edges
    assert set(colors) == {0, 1, 2}
    for i in range(h.num_edges):
        for j in range(i + 1, h.num_edges):
            if set(h.edges[i]) & set(h.edges[j]):
                assert colors[i] != colors[j]


@pytest.mark.parametrize("lx,ly", [(2, 2), (4, 4), (3, 4), (5, 3)])
def test_honeycomb_rejects_uncolorable_sizes(lx, ly):
    with pytest.raises(NotThreeColorableError):
        hexagonal_2colex(lx, ly)


@pytest.mark.parametrize("lx,ly", [(3, 3), (6, 3), (3, 6), (6, 6)])
def test_honeycomb_accepts_multiples_of_three(lx, ly):
    h = hexagonal_2colex(lx, ly)
    assert h.num_edges == lx * ly
    assert h.num_vertices == 2 * lx * ly


def test_honeycomb_size_validation():
    with pytest.raises(ValueError):
        hexagonal_2colex(1, 3)
