"""Simple homotopy certificates for graph and lattice complexes."""

from simple_homotopy import complexes, deformations, homology, utils
from simple_homotopy._version import __version__
from simple_homotopy.complexes import SimplicialComplex, from_facets
from simple_homotopy.deformations import (
    DeformationCertificate,
    hom_to_neighborhood_deformation,
    verify_certificate,
)
from simple_homotopy.homology import homology_equal

__all__ = [
    "__version__",
    "complexes",
    "DeformationCertificate",
    "deformations",
    "from_facets",
    "hom_to_neighborhood_deformation",
    "homology",
    "homology_equal",
    "SimplicialComplex",
    "utils",
    "verify_certificate",
]
