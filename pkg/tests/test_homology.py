"""Tests for `simple_homotopy.homology`."""

from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from simple_homotopy._complexes.common import EmptyComplexError, InputError, SizeCapError
from simple_homotopy._complexes.simplicial import SimplicialComplex
from simple_homotopy._deformations.certificate import verify_certificate
from simple_homotopy.homology import (
    HomologySummary,
    boundary_matrix,
    brute_force_collapse_search,
    homology,
    homology_equal,
    smith_normal_form,
)


def test_homology_of_rp2(rp2: SimplicialComplex) -> None:
    """Test the torsion of the projective plane."""
    summary = homology(rp2)
    assert summary.betti == (1, 0, 0)
    assert summary.torsion[1] == (2,)
    assert summary.euler_characteristic == 1


def test_homology_of_circle(circle: SimplicialComplex) -> None:
    """Test the Betti numbers of a circle."""
    summary = homology(circle)
    assert summary.betti == (1, 1)
    assert summary.to_json() == {
        "dims": [{"betti": 1, "torsion": []}, {"betti": 1, "torsion": []}],
        "euler": 0,
    }


def test_homology_of_empty_complex() -> None:
    """Test that the empty complex is rejected."""
    with pytest.raises(EmptyComplexError):
        homology(SimplicialComplex())


def test_homology_equal_pads(triangle: SimplicialComplex) -> None:
    """Test that a point and a 2-simplex compare equal."""
    point = SimplicialComplex.from_facets([[1]])
    assert homology_equal(point, triangle)
    assert homology(point).padded(3) == HomologySummary((1, 0, 0), ((), (), ()))


def test_homology_unequal(circle: SimplicialComplex, triangle: SimplicialComplex) -> None:
    """Test that a circle is told apart from a disk."""
    assert not homology_equal(circle, triangle)


@pytest.mark.parametrize(
    ("matrix", "expected"),
    [
        ([[2, 0], [0, 3]], ((1, 6), 2)),
        ([[1, 2], [3, 4]], ((1, 2), 2)),
        ([[2, 4], [4, 8]], ((2,), 1)),
        ([[0, 0]], ((), 0)),
    ],
)
def test_smith_normal_form(matrix: list[list[int]], expected: tuple) -> None:
    """Test invariant factors of small integer matrices."""
    assert smith_normal_form(matrix) == expected


def test_boundary_matrix(triangle: SimplicialComplex) -> None:
    """Test the shape and the squaring to zero of the boundary maps."""
    d1 = boundary_matrix(triangle, 1).to_Matrix()
    d2 = boundary_matrix(triangle, 2).to_Matrix()
    assert d1.shape == (3, 3)
    assert d2.shape == (3, 1)
    assert (d1 * d2).is_zero_matrix
    with pytest.raises(InputError):
        boundary_matrix(triangle, 0)
    with pytest.raises(InputError):
        boundary_matrix(triangle, 3)


def test_collapse_search_finds_a_collapse(triangle: SimplicialComplex) -> None:
    """Test that a 2-simplex collapses onto a vertex."""
    found = brute_force_collapse_search(triangle, SimplicialComplex.from_facets([[1]]))
    assert found is not None
    assert found.n_collapses == 3
    assert verify_certificate(found)


def test_collapse_search_fails_on_a_circle(circle: SimplicialComplex) -> None:
    """Test that a circle has no free faces to start with."""
    assert brute_force_collapse_search(circle, SimplicialComplex.from_facets([[1]])) is None


def test_collapse_search_cap(rp2: SimplicialComplex) -> None:
    """Test the face cap and its override for a wrong target."""
    with pytest.raises(SizeCapError):
        brute_force_collapse_search(rp2, SimplicialComplex.from_facets([[1]]))
    with pytest.raises(InputError, match="not a subcomplex"):
        brute_force_collapse_search(
            rp2,
            SimplicialComplex.from_facets([[1, 2, 3]]),
            unsafe=True,
        )


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    ),
)
def test_smith_normal_form_invariants(rows: list[list[int]]) -> None:
    """Test the rank, divisibility and determinant of the invariant factors."""
    factors, rank = smith_normal_form(rows)
    M = sympy.Matrix(rows)
    assert rank == M.rank()
    assert all(b % a == 0 for a, b in zip(factors, factors[1:], strict=False))
    if rank == 3:
        assert sympy.prod(factors) == abs(M.det())


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    ),
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
)
def test_smith_normal_form_under_unimodular_changes(
    rows: list[list[int]],
    row_factor: int,
    col_factor: int,
) -> None:
    """Test that adding multiples of rows and columns keeps the invariant factors."""
    U = sympy.eye(3)
    U[1, 0] = row_factor
    V = sympy.eye(3)
    V[0, 2] = col_factor
    changed = (U * sympy.Matrix(rows) * V).tolist()
    assert smith_normal_form(changed) == smith_normal_form(rows)
