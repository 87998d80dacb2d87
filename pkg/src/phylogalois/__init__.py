"""Galois connections between 1-nested phylogenetic networks and circular
split systems, with exact arithmetic and brute-force verification."""

from .circular import (
    CircularSystem,
    circular_systems,
    closure,
    count_circular_systems,
    ell,
    exterior_network,
    is_circular,
    is_outer_path,
)
from .exceptions import (
    BoundExceededError,
    InputError,
    InvalidNetworkError,
    KalmansonError,
    NotCircularError,
    NotOneNestedError,
    PhyloGaloisError,
)
from .metrics import (
    DistanceVector,
    WeightedNetwork,
    WeightedSplitSystem,
    circular_decompose,
    distance_from_network,
    distance_from_splits,
    find_kalmanson_orders,
    is_additive,
    is_kalmanson,
    l_w,
    s_w,
    total_weight,
    weighted_poset_compare,
)
from .networks import (
    NetworkStats,
    PhyloNetwork,
    classify,
    consistent_orders_network,
    displayed_splits,
    from_pc_tree,
    network_poset_compare,
    to_pc_tree,
    validate_network,
)
from .pctree import (
    PCTree,
    binary_one_nested_count,
    count_one_nested_classes,
    enumerate_binary_one_nested,
    enumerate_pc_trees,
)
from .polytope import (
    PolytopeVector,
    binary_vector_closed_form,
    bme_vertices,
    face_vertices,
    incidence_vector,
    minimize,
    network_vector,
    predicted_minimizers,
)
from .splits import (
    CircularOrder,
    PosetRelation,
    Split,
    SplitSystem,
    all_circular_orders,
    canonical_split,
    compatible,
    consistent_orders,
    count_split_systems,
    enumerate_split_systems,
    is_contiguous,
    poset_compare,
)

__version__ = "0.1.0"
