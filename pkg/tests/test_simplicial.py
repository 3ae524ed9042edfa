"""Tests for `simple_homotopy._complexes.simplicial`."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simple_homotopy._complexes.common import EmptyComplexError, InputError
from simple_homotopy._complexes.simplicial import (
    SimplicialComplex,
    barycentric_subdivision,
    cone,
    link,
    make_simplex,
    star,
    stellar_subdivision,
)

facet_lists = st.lists(
    st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=3),
    min_size=1,
    max_size=4,
)


def test_make_simplex_is_canonical() -> None:
    """Test that vertices are deduplicated and sorted."""
    assert make_simplex([3, 1, 3, 2]) == (1, 2, 3)
    assert make_simplex(["b", 2, (1,)]) == (2, "b", (1,))
    with pytest.raises(InputError):
        make_simplex([])


def test_from_facets(triangle: SimplicialComplex) -> None:
    """Test closure of a facet list."""
    assert triangle.f_vector() == (3, 3, 1)
    assert triangle.euler_characteristic() == 1
    assert triangle.facets == ((1, 2, 3),)
    assert triangle.dim == 2
    assert (1, 3) in triangle


def test_from_simplices_checks_closure() -> None:
    """Test that a family missing a face is rejected."""
    with pytest.raises(InputError, match="not closed"):
        SimplicialComplex.from_simplices([[1], [1, 2]])
    K = SimplicialComplex.from_simplices([[1], [2], [1, 2]])
    assert K.f_vector() == (2, 1)


def test_empty_complex() -> None:
    """Test the conventions for the empty complex."""
    K = SimplicialComplex()
    assert K.is_empty
    assert K.dim == -1
    assert K.f_vector() == ()
    with pytest.raises(EmptyComplexError):
        barycentric_subdivision(K)


def test_link_and_star(circle: SimplicialComplex) -> None:
    """Test link and closed star of a vertex of a circle."""
    assert set(link(circle, [1]).facets) == {(2,), (3,)}
    assert set(star(circle, [1]).facets) == {(1, 2), (1, 3)}
    with pytest.raises(InputError):
        link(circle, [1, 2, 3])


def test_cone(circle: SimplicialComplex) -> None:
    """Test the cone over a circle is a disc."""
    disc = cone(circle, 0)
    assert disc.f_vector() == (4, 6, 3)
    with pytest.raises(InputError, match="already a vertex"):
        cone(circle, 1)


def test_stellar_subdivision_of_edge() -> None:
    """Test subdividing an edge by its midpoint."""
    K = SimplicialComplex.from_facets([[1, 2]])
    sd = stellar_subdivision(K, [1, 2])
    assert set(sd.facets) == {(1, (1, 2)), (2, (1, 2))}


def test_stellar_subdivision_of_triangle_edge(triangle: SimplicialComplex) -> None:
    """Test that subdividing an edge of a triangle splits the triangle in two."""
    sd = stellar_subdivision(triangle, [1, 2], apex="v")
    assert set(sd.facets) == {(1, 3, "v"), (2, 3, "v")}
    with pytest.raises(InputError, match="collides"):
        stellar_subdivision(triangle, [1, 2], apex=3)


def test_barycentric_subdivision(triangle: SimplicialComplex) -> None:
    """Test the f-vector of the subdivided triangle."""
    bd = barycentric_subdivision(triangle)
    assert bd.f_vector() == (7, 12, 6)
    assert ((1,), (1, 2), (1, 2, 3)) in bd


def test_barycentric_subdivision_is_closed_under_faces(circle: SimplicialComplex) -> None:
    """Test that chains ending below a facet are simplices too."""
    edge = barycentric_subdivision(SimplicialComplex.from_facets([[1, 2]]))
    assert edge.f_vector() == (3, 2)
    assert set(edge.facets) == {((1,), (1, 2)), ((2,), (1, 2))}
    for K in (edge, barycentric_subdivision(circle)):
        assert SimplicialComplex.from_simplices(K.simplices) == K


def test_relabel() -> None:
    """Test injective relabelling and the rejection of a collapsing map."""
    K = SimplicialComplex.from_facets([[1, 2], [2, 3]])
    renamed = K.relabel({1: "a", 2: "b", 3: "c"})
    assert set(renamed.facets) == {("a", "b"), ("b", "c")}
    with pytest.raises(InputError, match="not injective"):
        K.relabel({1: 3})


def test_induced_subcomplex(triangle: SimplicialComplex) -> None:
    """Test restriction to a vertex subset."""
    sub = triangle.induced([1, 2])
    assert sub.facets == ((1, 2),)
    assert sub.is_subcomplex(triangle)


@settings(max_examples=30, deadline=None)
@given(facet_lists)
def test_subdivision_preserves_euler_characteristic(facets: list[list[int]]) -> None:
    """Test that barycentric and stellar subdivisions keep the Euler characteristic."""
    K = SimplicialComplex.from_facets(facets)
    chi = K.euler_characteristic()
    assert barycentric_subdivision(K).euler_characteristic() == chi
    sigma = K.facets[-1]
    assert stellar_subdivision(K, sigma).euler_characteristic() == chi
