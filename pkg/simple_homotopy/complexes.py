"""Imports for the complexes module."""

from __future__ import annotations

from ._complexes.common import EmptyComplexError, InputError, SizeCapError, check_cap, log
from ._complexes.crosscut import (
    Crosscut,
    CrosscutReport,
    atom_crosscut_complex,
    atoms_crosscut,
    bounded_below_complex,
    coatoms_crosscut,
    crosscut_complex,
    crosscut_map,
    crosscut_stage_maps,
    crosscut_sublattice,
    is_crosscut,
    make_crosscut,
    random_crosscut,
)
from ._complexes.graph import (
    BipartitePair,
    Graph,
    InvolutionReport,
    LovaszComplex,
    common_neighbors,
    complete_graph,
    cycle_graph,
    disconnected_graphs_complex,
    gamma_p_description,
    hom_k2,
    hom_k2_lattice,
    image_lattice,
    lovasz_complex,
    lovasz_involution_free,
    neighbor_closure,
    neighbor_image,
    neighborhood_complex,
    partition_atom_pair,
    path_graph,
)
from ._complexes.lattice import (
    BoundedLattice,
    NotALatticeError,
    as_lattice,
    atomic_sublattice,
    atoms,
    boolean_lattice,
    chain_lattice,
    closure_system_lattice,
    join_set,
    meet_set,
    partition_lattice,
    proper_part,
    random_closure_lattice,
    sublattice,
)
from ._complexes.poset import (
    MonotoneMap,
    Poset,
    RegularCWPoset,
    face_poset,
    from_covers,
    from_relation,
    linear_extension,
    opposite,
    order_complex,
    with_bounds,
)
from ._complexes.simplicial import (
    Simplex,
    SimplicialComplex,
    barycentric_subdivision,
    cone,
    euler_characteristic,
    f_vector,
    faces_of,
    facets_of,
    from_facets,
    link,
    make_simplex,
    star,
    stellar_subdivision,
)

__all__ = [
    "BipartitePair",
    "BoundedLattice",
    "Crosscut",
    "CrosscutReport",
    "EmptyComplexError",
    "Graph",
    "InputError",
    "InvolutionReport",
    "LovaszComplex",
    "MonotoneMap",
    "NotALatticeError",
    "Poset",
    "RegularCWPoset",
    "Simplex",
    "SimplicialComplex",
    "SizeCapError",
    "as_lattice",
    "atom_crosscut_complex",
    "atomic_sublattice",
    "atoms",
    "atoms_crosscut",
    "barycentric_subdivision",
    "boolean_lattice",
    "bounded_below_complex",
    "chain_lattice",
    "check_cap",
    "closure_system_lattice",
    "coatoms_crosscut",
    "common_neighbors",
    "complete_graph",
    "cone",
    "crosscut_complex",
    "crosscut_map",
    "crosscut_stage_maps",
    "crosscut_sublattice",
    "cycle_graph",
    "disconnected_graphs_complex",
    "euler_characteristic",
    "f_vector",
    "face_poset",
    "faces_of",
    "facets_of",
    "from_covers",
    "from_facets",
    "from_relation",
    "gamma_p_description",
    "hom_k2",
    "hom_k2_lattice",
    "image_lattice",
    "is_crosscut",
    "join_set",
    "linear_extension",
    "link",
    "log",
    "lovasz_complex",
    "lovasz_involution_free",
    "make_crosscut",
    "make_simplex",
    "meet_set",
    "neighbor_closure",
    "neighbor_image",
    "neighborhood_complex",
    "opposite",
    "order_complex",
    "partition_atom_pair",
    "partition_lattice",
    "path_graph",
    "proper_part",
    "random_closure_lattice",
    "random_crosscut",
    "star",
    "stellar_subdivision",
    "sublattice",
    "with_bounds",
]
