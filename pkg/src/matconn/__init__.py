"""matconn: matroid connectivity and Tutte-connectivity on finite and periodic graphs.

The package computes the rank-free connectivity function of oracle-defined
matroids, builds the finite-cycle / finite-bond / windowed cycle matroids of
multigraphs and periodic graphs, searches for matroid- and Tutte-separations,
and verifies the equivalences and duality invariances relating them.
"""

INFINITE = float("inf")

from .errors import (
    CapacityError,
    EmbeddingError,
    InputError,
    InternalConsistencyError,
    MatconnError,
    PreconditionError,
)
from .graphs import (
    EdgePartition,
    MultiGraph,
    boundary_size,
    component_count,
    cut_parity_check,
    incident_vertex_set,
    is_connected,
    is_two_connected,
)
from .periodic import (
    PeriodicEdgeSet,
    PeriodicGraph,
    edge_set_from_spec,
    window,
    window_contract,
)
from .matroids import (
    Basis,
    Matroid,
    SeparationReport,
    check_axioms,
    dual,
    find_matroid_separation,
    kappa,
    kappa_certificate,
    matroid_connectivity,
    matroid_from_circuits,
    max_independent,
    rank,
)
from .graphic import (
    is_topological_spanning_tree,
    kappa_formula,
    mc_window,
    mfb,
    mfc,
    topological_spanning_tree,
)
from .connectivity import (
    find_tutte_separation,
    matroid_sep_to_tutte_sep,
    tutte_connectivity,
    tutte_sep_to_matroid_sep,
    verify_equivalence,
)
from .duality import (
    DualPair,
    check_kappa_duality,
    planar_dual,
    tutte_duality_check,
    verify_dual_pair,
    verify_graphdual,
)

__all__ = [
    "INFINITE",
    "MultiGraph",
    "EdgePartition",
    "PeriodicGraph",
    "PeriodicEdgeSet",
    "incident_vertex_set",
    "component_count",
    "boundary_size",
    "is_connected",
    "is_two_connected",
    "cut_parity_check",
    "window",
    "window_contract",
    "edge_set_from_spec",
    "Matroid",
    "Basis",
    "SeparationReport",
    "check_axioms",
    "max_independent",
    "dual",
    "rank",
    "kappa",
    "kappa_certificate",
    "find_matroid_separation",
    "matroid_connectivity",
    "matroid_from_circuits",
    "mfc",
    "mfb",
    "mc_window",
    "kappa_formula",
    "topological_spanning_tree",
    "is_topological_spanning_tree",
    "find_tutte_separation",
    "tutte_connectivity",
    "tutte_sep_to_matroid_sep",
    "matroid_sep_to_tutte_sep",
    "verify_equivalence",
    "DualPair",
    "planar_dual",
    "verify_dual_pair",
    "verify_graphdual",
    "check_kappa_duality",
    "tutte_duality_check",
    "MatconnError",
    "InputError",
    "PreconditionError",
    "CapacityError",
    "EmbeddingError",
    "InternalConsistencyError",
]
