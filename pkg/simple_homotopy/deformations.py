"""Imports for the deformations module."""

from __future__ import annotations

from ._deformations.certificate import (
    DeformationCertificate,
    DeformationStep,
    VerificationReport,
    certificate_lines,
    concatenate,
    parse_certificate,
    verify_certificate,
)
from ._deformations.common import (
    MalformedMatchingError,
    MatchingConstructionError,
    PipelineError,
    TheoremContradictionError,
    log,
)
from ._deformations.lattice_matching import (
    jl_matching,
    jl_pivot,
    jl_to_order_collapse,
    restricted_jl_collapse,
    restricted_jl_matching,
)
from ._deformations.matching import (
    AcyclicityReport,
    PartialMatching,
    check_acyclic,
    matching_to_collapses,
)
from ._deformations.pipeline import (
    Stage,
    concatenate_stages,
    crosscut_deformation,
    gamma_bd_collapse,
    gamma_to_order_deformation,
    hom_to_neighborhood_deformation,
    hom_to_neighborhood_stages,
    neighborhood_to_lovasz_collapse,
    order_interior_collapse,
    order_to_crosscut_collapse,
)
from ._deformations.retractions import (
    closure_collapse,
    closure_matching,
    interior_collapse,
    interior_matching,
)
from ._deformations.subdivision import bd_deformation, stellar_deformation

__all__ = [
    "AcyclicityReport",
    "DeformationCertificate",
    "DeformationStep",
    "MalformedMatchingError",
    "MatchingConstructionError",
    "PartialMatching",
    "PipelineError",
    "Stage",
    "TheoremContradictionError",
    "VerificationReport",
    "bd_deformation",
    "certificate_lines",
    "check_acyclic",
    "closure_collapse",
    "closure_matching",
    "concatenate",
    "concatenate_stages",
    "crosscut_deformation",
    "gamma_bd_collapse",
    "gamma_to_order_deformation",
    "hom_to_neighborhood_deformation",
    "hom_to_neighborhood_stages",
    "interior_collapse",
    "interior_matching",
    "jl_matching",
    "jl_pivot",
    "jl_to_order_collapse",
    "log",
    "matching_to_collapses",
    "neighborhood_to_lovasz_collapse",
    "order_interior_collapse",
    "order_to_crosscut_collapse",
    "parse_certificate",
    "restricted_jl_collapse",
    "restricted_jl_matching",
    "stellar_deformation",
    "verify_certificate",
]
