"""Tests for the matchings in `simple_homotopy.deformations`."""

from __future__ import annotations

import pytest

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.crosscut import bounded_below_complex
from simple_homotopy._complexes.graph import complete_graph, cycle_graph, lovasz_complex
from simple_homotopy._complexes.lattice import (
    BoundedLattice,
    boolean_lattice,
    chain_lattice,
    partition_lattice,
    random_closure_lattice,
)
from simple_homotopy._complexes.poset import MonotoneMap, from_covers, order_complex
from simple_homotopy._complexes.simplicial import SimplicialComplex, faces_of
from simple_homotopy._deformations.certificate import verify_certificate
from simple_homotopy._deformations.common import (
    MalformedMatchingError,
    MatchingConstructionError,
)
from simple_homotopy._deformations.lattice_matching import (
    jl_matching,
    jl_pivot,
    jl_to_order_collapse,
    restricted_jl_matching,
)
from simple_homotopy._deformations.matching import (
    PartialMatching,
    check_acyclic,
    matching_to_collapses,
)
from simple_homotopy._deformations.retractions import (
    closure_collapse,
    closure_matching,
    interior_collapse,
    interior_matching,
)
from simple_homotopy.homology import brute_force_collapse_search


def _cone_matching() -> PartialMatching:
    simplex = SimplicialComplex.from_facets([[1, 2, 3, 4]])
    pairs = {tau: (*tau, 4) for tau in faces_of((1, 2, 3))}
    return PartialMatching(simplex, pairs)


def test_empty_matching_is_acyclic(triangle: SimplicialComplex) -> None:
    """Test that with no pairs every cell is critical."""
    matching = PartialMatching(triangle, {})
    report = check_acyclic(matching)
    assert report
    assert report.critical == triangle.simplices


def test_cone_matching() -> None:
    """Test that the cone matching of a tetrahedron leaves only the apex."""
    matching = _cone_matching()
    assert check_acyclic(matching)
    assert matching.critical == frozenset({(4,)})
    assert matching.lower_of((1, 2, 4)) == (1, 2)
    cert = matching_to_collapses(matching.complex, SimplicialComplex.from_facets([[4]]), matching)
    assert cert.n_collapses == 7
    assert verify_certificate(cert)
    assert cert.steps[0].coface == (1, 2, 3, 4)


def test_malformed_matchings(triangle: SimplicialComplex) -> None:
    """Test the validation of matched pairs."""
    with pytest.raises(MalformedMatchingError, match="does not cover"):
        PartialMatching(triangle, {(1,): (1, 2, 3)})
    with pytest.raises(MalformedMatchingError, match="both matched with"):
        PartialMatching(triangle, {(1,): (1, 2), (2,): (1, 2)})
    with pytest.raises(MalformedMatchingError, match="up and down"):
        PartialMatching(triangle, {(1,): (1, 2), (1, 2): (1, 2, 3)})
    with pytest.raises(MalformedMatchingError, match="not in the complex"):
        PartialMatching(triangle, {(1,): (1, 4)})


@pytest.mark.usefixtures("_quiet_logs")
def test_cyclic_matching(circle: SimplicialComplex) -> None:
    """Test that a matching around a circle is cyclic and cannot be scheduled."""
    matching = PartialMatching(circle, {(1,): (1, 2), (2,): (2, 3), (3,): (1, 3)})
    report = check_acyclic(matching)
    assert not report
    assert set(report.cycle) == {(1,), (2,), (3,)}
    with pytest.raises(MatchingConstructionError) as excinfo:
        matching_to_collapses(circle, SimplicialComplex(), matching)
    assert excinfo.value.state["acyclic"] is False


def test_matching_to_collapses_preconditions(triangle: SimplicialComplex) -> None:
    """Test that the critical cells must be exactly the subcomplex."""
    matching = PartialMatching(triangle, {(2, 3): (1, 2, 3)})
    with pytest.raises(InputError, match="Critical cells differ"):
        matching_to_collapses(triangle, SimplicialComplex.from_facets([[1]]), matching)
    other = SimplicialComplex.from_facets([[1, 2]])
    with pytest.raises(InputError, match="does not live"):
        matching_to_collapses(other, other, matching)


def test_closure_matching_on_a_chain() -> None:
    """Test the closure collapse of a three-element chain onto its top two elements."""
    Q = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    phi = MonotoneMap(Q, {1: 2, 2: 2, 3: 3})
    matching = closure_matching(Q, phi)
    assert matching.critical == frozenset({(2,), (3,), (2, 3)})
    cert = closure_collapse(Q, phi)
    assert cert.end == order_complex(Q.induced([2, 3]))
    assert verify_certificate(cert)


def test_interior_matching_on_a_chain() -> None:
    """Test the dual construction for a descending map."""
    Q = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    psi = MonotoneMap(Q, {1: 1, 2: 2, 3: 2})
    assert interior_matching(Q, psi).critical == frozenset({(1,), (2,), (1, 2)})
    assert verify_certificate(interior_collapse(Q, psi))
    with pytest.raises(InputError, match="ascending"):
        closure_matching(Q, psi)


def test_closure_matching_rejects_non_idempotent_maps() -> None:
    """Test that only idempotent maps are accepted."""
    Q = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    phi = MonotoneMap(Q, {1: 2, 2: 3, 3: 3})
    with pytest.raises(InputError, match="idempotent"):
        closure_matching(Q, phi)


def test_closure_matching_of_neighborhood_closure() -> None:
    """Test that N∘N collapses Bd N(C5) onto Lo(C5)."""
    from simple_homotopy._deformations.pipeline import neighborhood_to_lovasz_collapse

    G = cycle_graph(5)
    cert = neighborhood_to_lovasz_collapse(G)
    assert cert.end == lovasz_complex(G).complex
    assert verify_certificate(cert)


def test_jl_pivot(b3: BoundedLattice) -> None:
    """Test the pivot a(S) on simplices of J(B3)."""
    assert jl_pivot(b3, ((1,), (1, 2))) is None
    assert jl_pivot(b3, ((1, 2), (1, 3))) == (1,)
    assert jl_pivot(b3, ((1,), (1, 2), (1, 3))) == (1,)


def test_jl_matching_of_b3(b3: BoundedLattice) -> None:
    """Test that J(B3) collapses onto the hexagon Δ(bar B3)."""
    matching = jl_matching(b3)
    assert check_acyclic(matching)
    assert matching.complex == bounded_below_complex(b3)
    cert = jl_to_order_collapse(b3)
    assert cert.end == order_complex(b3.proper_part())
    assert cert.end.f_vector() == (6, 6)
    assert verify_certificate(cert)


@pytest.mark.parametrize(
    "lattice",
    [
        boolean_lattice(2),
        boolean_lattice(4),
        partition_lattice(3),
        partition_lattice(4),
        chain_lattice(5),
        *(random_closure_lattice(seed, max_elements=12) for seed in range(6)),
    ],
)
def test_jl_to_order_collapse(lattice: BoundedLattice) -> None:
    """Test the J(L) collapse on a corpus of lattices."""
    cert = jl_to_order_collapse(lattice)
    assert cert.n_expansions == 0
    assert cert.end == order_complex(lattice.proper_part())
    assert verify_certificate(cert)


def test_restricted_jl_matching() -> None:
    """Test that the restricted matching leaves exactly Lo(K4)."""
    G = complete_graph(4)
    matching = restricted_jl_matching(G)
    assert matching.critical == lovasz_complex(G).complex.simplices
    assert check_acyclic(matching)


def _matching_cases() -> dict[str, tuple[PartialMatching, SimplicialComplex]]:
    chain = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    b3 = boolean_lattice(3)
    return {
        "cone": (_cone_matching(), SimplicialComplex.from_facets([[4]])),
        "closure": (
            closure_matching(chain, MonotoneMap(chain, {1: 2, 2: 2, 3: 3})),
            order_complex(chain.induced([2, 3])),
        ),
        "interior": (
            interior_matching(chain, MonotoneMap(chain, {1: 1, 2: 2, 3: 2})),
            order_complex(chain.induced([1, 2])),
        ),
        "bounded below": (jl_matching(b3), order_complex(b3.proper_part())),
    }


@pytest.mark.parametrize("case", ["cone", "closure", "interior", "bounded below"])
def test_collapse_schedule_agrees_with_exhaustive_search(case: str) -> None:
    """Test that an exhaustive search confirms the collapses read off a matching."""
    matching, K_sub = _matching_cases()[case]
    cert = matching_to_collapses(matching.complex, K_sub, matching)
    found = brute_force_collapse_search(matching.complex, K_sub)
    assert found is not None
    assert verify_certificate(found)
    assert verify_certificate(cert)
    assert found.end == cert.end == K_sub
    assert found.n_collapses == cert.n_collapses == len(matching.pairs)
