"""The two kernel implementations must be interchangeable.

Every function is compared pairwise on random inputs, including an input
large enough to cross a block boundary, and the environment switch is
exercised in a subprocess because the backend is chosen at import time.
"""

import math
import os
import random
import subprocess
import sys

import numpy as np
import pytest

from spincss import _kernels_numba, _kernels_numpy
from spincss import backend
from spincss.gf2 import BitMatrix, BitVector, independent_row_indices

MODULES = (_kernels_numpy, _kernels_numba)


def _random_masks(r: random.Random, n_masks: int, n_bits: int) -> np.ndarray:
    return np.array([r.randrange(1 << n_bits) for _ in range(n_masks)], dtype=np.uint64)


def _independent_masks(r: random.Random, n_masks: int, n_bits: int) -> np.ndarray:
    while True:
        masks = _random_masks(r, n_masks, n_bits)
        rows = [BitVector(n_bits, int(w)) for w in masks]
        m = BitMatrix.from_rows(rows, n_bits)
        if len(independent_row_indices(m)) == n_masks:
            return masks


def test_partition_partials_agree():
    r = random.Random(11)
    for _ in range(25):
        n_spins = r.randint(1, 8)
        n_edges = r.randint(1, 6)
        masks = _random_masks(r, n_edges, n_spins)
        couplings = np.array([r.uniform(-2, 2) for _ in range(n_edges)])
        beta = r.uniform(0, 2)
        shift = r.choice((0.0, 1.5))
        a = _kernels_numpy.partition_partials(masks, couplings, beta, n_spins, shift)
        b = _kernels_numba.partition_partials(masks, couplings, beta, n_spins, shift)
        assert np.allclose(a.sum(), b.sum(), rtol=1e-13)


def test_partition_partials_cross_block_boundary():
    # 2^17 configurations span two blocks; the running accumulators are
    # resynchronized at the flush, so drift would show up here
    r = random.Random(5)
    n_spins = 17
    masks = _random_masks(r, 5, n_spins)
    couplings = np.array([r.uniform(-2, 2) for _ in range(5)])
    a = _kernels_numpy.partition_partials(masks, couplings, 0.7, n_spins, 0.0)
    b = _kernels_numba.partition_partials(masks, couplings, 0.7, n_spins, 0.0)
    assert a.shape == b.shape == (2,)
    assert np.allclose(a, b, rtol=1e-12)


def test_partition_max_exponent_agrees():
    r = random.Random(13)
    for _ in range(25):
        n_spins = r.randint(1, 8)
        n_edges = r.randint(1, 6)
        masks = _random_masks(r, n_edges, n_spins)
        couplings = np.array([r.uniform(-3, 3) for _ in range(n_edges)])
        beta = r.uniform(0, 2)
        a = _kernels_numpy.partition_max_exponent(masks, couplings, beta, n_spins)
        b = _kernels_numba.partition_max_exponent(masks, couplings, beta, n_spins)
        assert math.isclose(a, b, rel_tol=1e-13, abs_tol=1e-13)


def test_span_kernels_agree():
    r = random.Random(17)
    for _ in range(25):
        n_bits = r.randint(1, 10)
        n_gens = r.randint(0, min(6, n_bits))
        masks = _independent_masks(r, n_gens, n_bits) if n_gens else np.zeros(0, dtype=np.uint64)
        couplings = np.array([r.uniform(-2, 2) for _ in range(n_bits)])
        beta = r.uniform(0, 2)
        a = _kernels_numpy.span_exp_partials(masks, couplings, beta, 0.0)
        b = _kernels_numba.span_exp_partials(masks, couplings, beta, 0.0)
        assert np.allclose(a.sum(), b.sum(), rtol=1e-13)
        am = _kernels_numpy.span_max_exponent(masks, couplings, beta)
        bm = _kernels_numba.span_max_exponent(masks, couplings, beta)
        assert math.isclose(am, bm, rel_tol=1e-13, abs_tol=1e-13)


def test_span_crosses_chunk_boundary():
    # 17 generators exceed the numpy backend's 2^16 low-word chunk
    r = random.Random(19)
    masks = _independent_masks(r, 17, 20)
    couplings = np.array([r.uniform(-1, 1) for _ in range(20)])
    a = _kernels_numpy.span_exp_partials(masks, couplings, 0.4, 0.0)
    b = _kernels_numba.span_exp_partials(masks, couplings, 0.4, 0.0)
    assert math.isclose(float(a.sum()), float(b.sum()), rel_tol=1e-12)


def test_weight_tally_agrees():
    r = random.Random(23)
    for _ in range(25):
        n_bits = r.randint(1, 12)
        n_gens = r.randint(0, min(8, n_bits))
        masks = _independent_masks(r, n_gens, n_bits) if n_gens else np.zeros(0, dtype=np.uint64)
        a = _kernels_numpy.weight_tally(masks, n_bits)
        b = _kernels_numba.weight_tally(masks, n_bits)
        assert np.array_equal(a, b)
        assert int(a.sum()) == 1 << n_gens


def test_weight_tally_product_form():
    # independent single-bit generators give the binomial distribution
    masks = np.array([1 << i for i in range(10)], dtype=np.uint64)
    for mod in MODULES:
        counts = mod.weight_tally(masks, 10)
        assert list(counts) == [math.comb(10, w) for w in range(11)]


@pytest.mark.parametrize("name", ["numpy", "numba"])
def test_backend_env_selection(name):
    env = dict(os.environ, SPINCSS_BACKEND=name)
    proc = subprocess.run(
        [sys.executable, "-c", "from spincss import backend; print(backend.BACKEND_NAME)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == name


def test_backend_rejects_unknown_name():
    env = dict(os.environ, SPINCSS_BACKEND="fortran")
    proc = subprocess.run(
        [sys.executable, "-c", "import spincss.backend"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode != 0
    assert "SPINCSS_BACKEND" in proc.stderr


def test_active_backend_is_exposed():
    assert backend.BACKEND_NAME in ("numpy", "numba")
