"""Classical spin models on hypergraphs, CSS states on their duals.

The core objects are :class:`Hypergraph`, :class:`SpinModel`, and
:class:`CssState`.  ``verify_duality`` checks the exact identity tying a
model's partition function to a state overlap on the dual hypergraph, and
the ``stability_*`` functions evaluate noise-stability sums both directly
and through the partition-function route.
"""

from .css import (
    CssState,
    css_from_hypergraph,
    statevector,
    verify_stabilized,
    x_weight_distribution,
    z_weight_distribution,
)
from .duality import DUALITY_TOLERANCE, DualityReport, overlap_group_sum, verify_duality
from .errors import (
    CapacityError,
    IsolatedVertexError,
    ModelFormatError,
    NonUniformCouplingError,
    NotThreeColorableError,
    SpinCssError,
)
from .gf2 import BitMatrix, BitVector, independent_row_indices, in_span, null_space_basis, rank
from .hypergraph import (
    Hypergraph,
    constraint_space_bruteforce,
    dual,
    edge_matrix,
    labeled_equal,
    orthogonal,
)
from .io import (
    ModelDocument,
    document_from_hypergraph,
    document_from_parts,
    parse_model,
    serialize_model,
    to_hypergraph,
    to_spin_model,
)
from .spins import SpinModel, energy, partition_function, partition_function_edge_vars
from .stability import (
    StabilityCurve,
    beta_from_p_bitflip,
    beta_from_p_phaseflip,
    critical_phaseflip_from_bitflip,
    ising_square_critical_beta_j,
    p_from_beta_bitflip,
    p_from_beta_phaseflip,
    stability_bitflip_direct,
    stability_bitflip_via_partition,
    stability_phaseflip_direct,
    stability_phaseflip_via_partition,
    sweep_stability,
)
from .zoo import (
    Graph,
    cubic_torus,
    cycle_graph,
    hexagonal_2colex,
    hexagonal_2colex_face_colors,
    ising_model,
    square_torus,
    toric_code_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "CapacityError",
    "CssState",
    "DUALITY_TOLERANCE",
    "DualityReport",
    "Graph",
    "Hypergraph",
    "IsolatedVertexError",
    "ModelDocument",
    "ModelFormatError",
    "NonUniformCouplingError",
    "NotThreeColorableError",
    "SpinCssError",
    "SpinModel",
    "StabilityCurve",
    "beta_from_p_bitflip",
    "beta_from_p_phaseflip",
    "constraint_space_bruteforce",
    "critical_phaseflip_from_bitflip",
    "css_from_hypergraph",
    "cubic_torus",
    "cycle_graph",
    "document_from_hypergraph",
    "document_from_parts",
    "dual",
    "edge_matrix",
    "energy",
    "hexagonal_2colex",
    "hexagonal_2colex_face_colors",
    "in_span",
    "independent_row_indices",
    "ising_model",
    "ising_square_critical_beta_j",
    "labeled_equal",
    "null_space_basis",
    "orthogonal",
    "overlap_group_sum",
    "p_from_beta_bitflip",
    "p_from_beta_phaseflip",
    "parse_model",
    "partition_function",
    "partition_function_edge_vars",
    "rank",
    "serialize_model",
    "square_torus",
    "stability_bitflip_direct",
    "stability_bitflip_via_partition",
    "stability_phaseflip_direct",
    "stability_phaseflip_via_partition",
    "statevector",
    "sweep_stability",
    "to_hypergraph",
    "to_spin_model",
    "toric_code_hypergraph",
    "verify_duality",
    "verify_stabilized",
    "x_weight_distribution",
    "z_weight_distribution",
]
