"""Fixed loci of f^[n]: Young diagrams, tangent weights at monomial ideals,
and the classification of fixed components from local data."""

from .enumerate import (
    ENUMERATION_MAX_N,
    KINDS,
    Crosscheck,
    FixedComponent,
    FixedLocusReport,
    Piece,
    enumerate_fixed_components,
    site_pieces,
)
from .partitions import PartitionDiagram, diagram, monomial_fixed_points, partitions, transpose
from .tangent import (
    TangentWeightReport,
    curvilinear_fixed_directions,
    grid_criterion_nondegenerate,
    hom_degrees,
    local_weight,
    monomial_tangent_weights,
    syzygy_constraints,
)

__all__ = [
    "ENUMERATION_MAX_N",
    "KINDS",
    "Crosscheck",
    "FixedComponent",
    "FixedLocusReport",
    "Piece",
    "enumerate_fixed_components",
    "site_pieces",
    "PartitionDiagram",
    "diagram",
    "monomial_fixed_points",
    "partitions",
    "transpose",
    "TangentWeightReport",
    "curvilinear_fixed_directions",
    "grid_criterion_nondegenerate",
    "hom_degrees",
    "local_weight",
    "monomial_tangent_weights",
    "syzygy_constraints",
]
