"""Tests for `simple_homotopy._complexes.poset`."""

from __future__ import annotations

import pytest

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.poset import (
    MonotoneMap,
    face_poset,
    from_covers,
    from_relation,
    order_complex,
    with_bounds,
)
from simple_homotopy._complexes.simplicial import SimplicialComplex


@pytest.mark.usefixtures("_quiet_logs")
def test_from_covers_normalizes_redundant_covers() -> None:
    """Test that a transitive cover pair is accepted and reported."""
    P = from_covers("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert P.lt("a", "c")
    assert P.covers == (("a", "b"), ("b", "c"))
    assert P.redundant_covers == (("a", "c"),)


def test_from_covers_rejects_cycles_and_unknowns() -> None:
    """Test the precondition errors of `from_covers`."""
    with pytest.raises(InputError, match="cycle"):
        from_covers("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(InputError, match="unknown element"):
        from_covers("ab", [("a", "z")])


def test_from_relation_checks_transitivity() -> None:
    """Test that a non-transitive relation is rejected."""
    pairs = {(1, 2), (2, 3)}
    with pytest.raises(InputError, match="not transitive"):
        from_relation([1, 2, 3], lambda x, y: (x, y) in pairs)


def test_rank_and_linear_extension() -> None:
    """Test that the linear extension respects the order."""
    P = from_covers([1, 2, 3, 4], [(1, 3), (2, 3), (3, 4)])
    assert P.rank == {1: 0, 2: 0, 3: 1, 4: 2}
    position = {x: i for i, x in enumerate(P.linear_extension)}
    assert all(position[x] < position[y] for x, y in P.covers)
    assert P.minimal_elements == (1, 2)
    assert P.maximal_elements == (4,)


def test_with_bounds() -> None:
    """Test adjoining bounds and rejecting colliding labels."""
    P = from_covers(["a", "b"], [])
    bounded = with_bounds(P)
    assert bounded.lt("_0", "a")
    assert bounded.lt("b", "_1")
    with pytest.raises(InputError, match="collides"):
        with_bounds(P, bottom="a")


def test_chains_and_order_complex() -> None:
    """Test that the order complex of a 2x2 crown is a circle."""
    P = from_covers("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    K = order_complex(P)
    assert K.f_vector() == (4, 4)
    assert len(P.maximal_chains()) == 4
    assert P.is_antichain("ab")
    assert P.is_chain("ac")


def test_face_poset() -> None:
    """Test the face poset of a triangle."""
    F = face_poset(SimplicialComplex.from_facets([[1, 2, 3]]))
    assert F.f_vector() == (3, 3, 1)
    assert F.euler_characteristic() == 1
    assert F.poset.lt((1,), (1, 2, 3))


def test_monotone_map_validation() -> None:
    """Test that non-monotone and incomparable maps are rejected."""
    P = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    up = MonotoneMap(P, {1: 2, 2: 2, 3: 3})
    assert up.kind == "ascending"
    assert up.is_idempotent
    assert up.fixed_points == (2, 3)
    with pytest.raises(InputError, match="order-preserving"):
        MonotoneMap(P, {1: 3, 2: 2, 3: 3})
    crown = from_covers("abc", [("a", "c")])
    with pytest.raises(InputError, match="not comparable"):
        MonotoneMap(crown, {"a": "b", "b": "b", "c": "c"})


def test_monotone_map_composition() -> None:
    """Test composing an ascending and a descending map."""
    P = from_covers([1, 2, 3], [(1, 2), (2, 3)])
    up = MonotoneMap(P, {1: 2, 2: 2, 3: 3})
    down = MonotoneMap(P, {1: 1, 2: 2, 3: 2})
    both = up.then(down)
    assert both.values == {1: 2, 2: 2, 3: 2}
    assert both.kind == "mixed"
