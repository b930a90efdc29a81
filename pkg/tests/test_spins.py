import math

import pytest

from helpers import brute_partition, random_hypergraph
from spincss.errors import CapacityError
from spincss.hypergraph import Hypergraph
from spincss.spins import (
    EDGE_ENUM_MAX_EDGES,
    PARTITION_MAX_SPINS,
    SpinModel,
    energy,
    partition_function,
    partition_function_edge_vars,
)

TRIANGLE = Hypergraph(3, [(0, 1), (0, 2), (1, 2)])


def test_model_validation():
    with pytest.raises(ValueError):
        SpinModel(TRIANGLE, (1.0, 1.0), 0.5)  # wrong coupling count
    with pytest.raises(ValueError):
        SpinModel(TRIANGLE, (1.0, 1.0, 1.0), -0.1)
    m = SpinModel(TRIANGLE, (1, 2, 3), 0.5)
    assert m.couplings == (1.0, 2.0, 3.0)


def test_energy_by_hand():
    m = SpinModel(TRIANGLE, (1.0, 2.0, 3.0), 1.0)
    assert energy(m, (1, 1, 1)) == 6.0
    assert energy(m, (1, -1, 1)) == -1.0 + 2.0 - 3.0
    assert energy(m, (-1, -1, -1)) == 1.0 + 2.0 + 3.0
    with pytest.raises(ValueError):
        energy(m, (1, 1))
    with pytest.raises(ValueError):
        energy(m, (1, 0, 1))


def test_triangle_partition_closed_form():
    beta = 0.8
    m = SpinModel(TRIANGLE, (1.0, 1.0, 1.0), beta)
    expected = 2 * math.exp(-3 * beta) + 6 * math.exp(beta)
    assert math.isclose(partition_function(m), expected, rel_tol=1e-14)
    assert math.isclose(partition_function_edge_vars(m), expected, rel_tol=1e-14)


def test_double_bond_partition():
    h = Hypergraph(2, [(0, 1), (0, 1)])
    m = SpinModel(h, (1.0, 1.0), 0.6)
    expected = 2 * math.exp(-1.2) + 2 * math.exp(1.2)
    assert math.isclose(partition_function(m), expected, rel_tol=1e-14)
    assert math.isclose(partition_function_edge_vars(m), expected, rel_tol=1e-14)


def test_infinite_temperature_counts_configurations():
    for k in (1, 3, 5):
        h = Hypergraph(k, [tuple(range(k))])
        m = SpinModel(h, (2.5,), 0.0)
        assert partition_function(m) == float(1 << k)
        assert partition_function_edge_vars(m) == float(1 << k)


def test_routes_agree_with_brute_force(rng):
    for _ in range(60):
        h = random_hypergraph(rng, 6, 6)
        couplings = tuple(rng.choice((-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)) for _ in h.edges)
        beta = rng.choice((0.0, 0.3, 0.9, 1.7))
        m = SpinModel(h, couplings, beta)
        z = brute_partition(h, couplings, beta)
        assert math.isclose(partition_function(m), z, rel_tol=1e-12)
        assert math.isclose(partition_function_edge_vars(m), z, rel_tol=1e-12)


def test_large_exponents_stay_finite():
    # single spin, single edge: Z = e^{700} + e^{-700}
    h = Hypergraph(1, [(0,)])
    m = SpinModel(h, (-700.0,), 1.0)
    z = partition_function(m)
    assert math.isfinite(z)
    assert math.isclose(z, math.exp(700), rel_tol=1e-12)
    assert math.isclose(partition_function_edge_vars(m), math.exp(700), rel_tol=1e-12)


def test_cancelling_couplings_do_not_underflow():
    # both configurations have exactly zero energy, so Z = 2 despite the
    # naive per-term bound exp(beta * sum|J|) being astronomically large
    h = Hypergraph(1, [(0,), (0,)])
    m = SpinModel(h, (400.0, -400.0), 1.5)
    assert partition_function(m) == 2.0
    assert partition_function_edge_vars(m) == 2.0


def test_shifted_path_matches_brute_force():
    h = Hypergraph(2, [(0,), (0,), (1,)])
    couplings = (400.0, -400.0, 350.0)
    m = SpinModel(h, couplings, 1.0)
    expected = 2 * (math.exp(-350.0) + math.exp(350.0))
    assert math.isclose(partition_function(m), expected, rel_tol=1e-12)
    assert math.isclose(partition_function_edge_vars(m), expected, rel_tol=1e-12)


def test_capacity_limits():
    k = PARTITION_MAX_SPINS + 1
    h = Hypergraph(k, [tuple(range(k))])
    with pytest.raises(CapacityError):
        partition_function(SpinModel(h, (1.0,), 0.5))
    n = EDGE_ENUM_MAX_EDGES + 1
    h2 = Hypergraph(2, [(0, 1)] * n)
    with pytest.raises(CapacityError):
        partition_function_edge_vars(SpinModel(h2, (1.0,) * n, 0.5))
