"""Digital topology on graphs.

Graphs stand in for topological spaces: the rim of a vertex (the induced
subgraph on its neighbors) plays the role of a point's boundary sphere,
and every notion here - contractibility, spheres, disks, manifolds,
simple pairs, compression - is defined through rims and induced
subgraphs alone.  Continuous shapes enter through cubical digitization.
"""

from .digitize import (
    Circle,
    CubeSurface,
    CubicalModel,
    ImplicitSurface,
    Segment,
    SphereSurface,
    cube_graph,
    digitize,
    model_graph,
    parse_shape,
)
from .errors import CapacityError, DomainError
from .gallery import gallery, gallery_names
from .graph import (
    Graph,
    format_graph,
    fresh_labels,
    parse_graph,
    read_graph,
    write_graph,
)
from .homotopy import (
    SIZE_CAP,
    CertStep,
    ReductionCertificate,
    contractibility_certificate,
    format_certificate,
    is_contractible,
    is_simple_edge,
    is_simple_point,
    parse_certificate,
    reduce_to_subgraph,
)
from .invariants import (
    InvariantReport,
    betti_numbers,
    clique_counts,
    euler_characteristic,
    format_report,
    invariant_report,
    parse_report,
)
from .manifold import (
    Classification,
    Disk,
    classify,
    disk_dimension,
    disk_from_sphere,
    is_disk,
    is_manifold,
    is_sphere,
    manifold_dimension,
    minimal_sphere,
    sphere_by_complement,
    sphere_dimension,
    suspend,
)
from .transform import (
    TransformLog,
    TransformStep,
    compress,
    connected_sum,
    contract_pair,
    find_simple_pairs,
    format_log,
    is_simple_pair,
    parse_log,
    propose_isomorphism,
    separate,
    split_point,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CertStep",
    "Circle",
    "Classification",
    "CubeSurface",
    "CubicalModel",
    "Disk",
    "DomainError",
    "Graph",
    "ImplicitSurface",
    "InvariantReport",
    "ReductionCertificate",
    "SIZE_CAP",
    "Segment",
    "SphereSurface",
    "TransformLog",
    "TransformStep",
    "betti_numbers",
    "classify",
    "clique_counts",
    "compress",
    "connected_sum",
    "contract_pair",
    "contractibility_certificate",
    "cube_graph",
    "digitize",
    "disk_dimension",
    "disk_from_sphere",
    "euler_characteristic",
    "find_simple_pairs",
    "format_certificate",
    "format_graph",
    "format_log",
    "format_report",
    "fresh_labels",
    "gallery",
    "gallery_names",
    "invariant_report",
    "is_contractible",
    "is_disk",
    "is_manifold",
    "is_simple_edge",
    "is_simple_pair",
    "is_simple_point",
    "is_sphere",
    "manifold_dimension",
    "minimal_sphere",
    "model_graph",
    "parse_certificate",
    "parse_graph",
    "parse_log",
    "parse_report",
    "parse_shape",
    "propose_isomorphism",
    "read_graph",
    "reduce_to_subgraph",
    "separate",
    "sphere_by_complement",
    "sphere_dimension",
    "split_point",
    "suspend",
    "write_graph",
]
