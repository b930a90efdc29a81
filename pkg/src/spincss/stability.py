"""Stability probabilities of CSS states under independent single-qubit noise.

The stability of a state against bit-flip noise at rate p is the total
probability that the error pattern lands exactly on an X-stabilizer; for
phase-flip noise, on a Z-stabilizer.  Two routes are provided:

- direct: weight-enumerate the group and evaluate the binomial-weighted sum.
- via the partition function: for a uniform positive coupling, a change of
  variable turns the same sum into the spin model's Z at a matched inverse
  temperature.  Bit-flip uses p/(1-p) = exp(-2*beta*J); phase-flip uses
  1-2p = exp(-2*beta*J).

The two routes agreeing is a computation of the classical-quantum
correspondence, not a numerical accident, which is why both are kept and
compared rather than one implemented in terms of the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .css import (
    CssState,
    WeightDistribution,
    css_from_hypergraph,
    x_weight_distribution,
    z_weight_distribution,
)
from .errors import NonUniformCouplingError
from .gf2 import rank as gf2_rank
from .hypergraph import dual, edge_matrix
from .spins import SpinModel, partition_function


def _binomial_weighted(dist: WeightDistribution, n_qubits: int, p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return sum(count * p**w * (1.0 - p) ** (n_qubits - w) for w, count in sorted(dist.items()))


def stability_bitflip_direct(c: CssState, p: float) -> float:
    """Probability that an i.i.d. rate-p bit-flip pattern is an X-stabilizer."""
    return _binomial_weighted(x_weight_distribution(c), c.n_qubits, p)


def stability_phaseflip_direct(c: CssState, p: float) -> float:
    """Probability that an i.i.d. rate-p phase-flip pattern is a Z-stabilizer."""
    return _binomial_weighted(z_weight_distribution(c), c.n_qubits, p)


def _uniform_positive_coupling(m: SpinModel) -> float:
    js = set(m.couplings)
    if len(js) != 1:
        raise NonUniformCouplingError(
            f"couplings must all be equal, got {sorted(js)}"
        )
    j = js.pop()
    if not j > 0:
        raise NonUniformCouplingError(f"coupling must be positive, got {j}")
    return j


def _check_open_half(p: float) -> None:
    if not 0.0 < p < 0.5:
        raise ValueError(f"p must lie in (0, 1/2), got {p}")


def p_from_beta_bitflip(beta: float, j: float) -> float:
    """Noise rate matched to an inverse temperature: p/(1-p) = exp(-2*beta*J)."""
    if not j > 0:
        raise ValueError(f"J must be positive, got {j}")
    if not beta >= 0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    return 1.0 / (1.0 + math.exp(2.0 * beta * j))


def beta_from_p_bitflip(p: float, j: float) -> float:
    """Inverse of p_from_beta_bitflip on p in (0, 1/2]."""
    if not j > 0:
        raise ValueError(f"J must be positive, got {j}")
    if not 0.0 < p <= 0.5:
        raise ValueError(f"p must lie in (0, 1/2], got {p}")
    return math.log((1.0 - p) / p) / (2.0 * j)


def p_from_beta_phaseflip(beta: float, j: float) -> float:
    """Noise rate matched to an inverse temperature: 1-2p = exp(-2*beta*J)."""
    if not j > 0:
        raise ValueError(f"J must be positive, got {j}")
    if not beta >= 0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    return (1.0 - math.exp(-2.0 * beta * j)) / 2.0


def beta_from_p_phaseflip(p: float, j: float) -> float:
    """Inverse of p_from_beta_phaseflip on p in [0, 1/2)."""
    if not j > 0:
        raise ValueError(f"J must be positive, got {j}")
    if not 0.0 <= p < 0.5:
        raise ValueError(f"p must lie in [0, 1/2), got {p}")
    return -math.log(1.0 - 2.0 * p) / (2.0 * j)


def _aligned_model(m: SpinModel, beta: float) -> SpinModel:
    # The change of variable assumes Boltzmann weights that favor positive
    # edge products; with the plus-sign energy convention here, that is the
    # model with negated couplings (odd-weight groups expose the difference).
    return SpinModel(m.h, tuple(-j for j in m.couplings), beta)


def stability_bitflip_via_partition(m: SpinModel, p: float) -> float:
    """Bit-flip stability of the dual CSS state, computed from Z alone.

    W(p) = [p(1-p)]^(N/2) * Z(beta_p) / 2**(K-M): substituting the matched
    beta turns each group element's Boltzmann weight into its binomial error
    probability.  The model's own beta plays no role.
    """
    j = _uniform_positive_coupling(m)
    _check_open_half(p)
    beta = beta_from_p_bitflip(p, j)
    z = partition_function(_aligned_model(m, beta))
    n_edges = m.h.num_edges
    rank = gf2_rank(edge_matrix(m.h))
    multiplicity = 2.0 ** (m.h.num_vertices - rank)
    return (p * (1.0 - p)) ** (n_edges / 2.0) * z / multiplicity


def stability_phaseflip_via_partition(m: SpinModel, p: float) -> float:
    """Phase-flip stability of the dual CSS state, computed from Z alone.

    V(p) = (1-2p)^(N/2) * Z(beta_p) / 2**K with the phase-flip change of
    variable.
    """
    j = _uniform_positive_coupling(m)
    _check_open_half(p)
    beta = beta_from_p_phaseflip(p, j)
    z = partition_function(_aligned_model(m, beta))
    return (1.0 - 2.0 * p) ** (m.h.num_edges / 2.0) * z / 2.0**m.h.num_vertices


def critical_phaseflip_from_bitflip(p_b: float) -> float:
    """Phase-flip rate sharing a matched temperature with bit-flip rate p_b.

    p_f = 1/2 - (p_b/2)/(1-p_b); fixed point at 1 - sqrt(2)/2, where both
    changes of variable land on the square-lattice critical coupling.
    """
    if not 0.0 <= p_b <= 0.5:
        raise ValueError(f"p_b must lie in [0, 1/2], got {p_b}")
    return 0.5 - (p_b / 2.0) / (1.0 - p_b)


def ising_square_critical_beta_j() -> float:
    """The self-dual coupling of the square-lattice Ising model, (1/2)ln(1+sqrt(2))."""
    return 0.5 * math.log(1.0 + math.sqrt(2.0))


@dataclass(frozen=True)
class StabilityCurve:
    """Stability values over a noise-rate grid for one CSS state."""

    rows: tuple[tuple[float, float], ...]
    noise: str
    n_qubits: int
    rank: int
    label: str = ""


def sweep_stability(
    m: SpinModel, p_grid: Iterable[float], noise: str, label: str = ""
) -> StabilityCurve:
    """Direct-route stability of the dual CSS state at each grid rate.

    The weight distribution is enumerated once; each row is then a
    polynomial evaluation, so rows are independent and the grid order is
    preserved.  Couplings and beta are irrelevant to the direct route and
    are not restricted here.
    """
    if noise not in ("bitflip", "phaseflip"):
        raise ValueError(f"noise must be 'bitflip' or 'phaseflip', got {noise!r}")
    grid = [float(p) for p in p_grid]
    for p in grid:
        _check_open_half(p)
    c = css_from_hypergraph(dual(m.h))
    dist = x_weight_distribution(c) if noise == "bitflip" else z_weight_distribution(c)
    rows = tuple((p, _binomial_weighted(dist, c.n_qubits, p)) for p in grid)
    return StabilityCurve(
        rows=rows, noise=noise, n_qubits=c.n_qubits, rank=c.x_rank, label=label
    )
