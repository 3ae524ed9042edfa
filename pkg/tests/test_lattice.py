"""Tests for `simple_homotopy._complexes.lattice`."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simple_homotopy._complexes.common import InputError, SizeCapError
from simple_homotopy._complexes.lattice import (
    BoundedLattice,
    NotALatticeError,
    as_lattice,
    atomic_sublattice,
    boolean_lattice,
    chain_lattice,
    closure_system_lattice,
    partition_lattice,
    random_closure_lattice,
)
from simple_homotopy._complexes.poset import from_covers, order_complex, with_bounds
from simple_homotopy.homology import homology


def test_boolean_lattice(b3: BoundedLattice) -> None:
    """Test bounds, atoms, meets and joins of B3."""
    assert len(b3) == 8
    assert b3.bottom == ()
    assert b3.top == (1, 2, 3)
    assert b3.atoms == ((1,), (2,), (3,))
    assert b3.join((1,), (2,)) == (1, 2)
    assert b3.meet((1, 2), (2, 3)) == (2,)
    assert b3.meet_set([]) == b3.top
    assert b3.join_set([]) == b3.bottom
    assert b3.is_atomic


def test_partition_lattice_sizes() -> None:
    """Test the Bell numbers and the partition labels."""
    assert len(partition_lattice(3)) == 5
    pi4 = partition_lattice(4)
    assert len(pi4) == 15
    assert pi4.bottom == ((1,), (2,), (3,), (4,))
    assert pi4.top == ((1, 2, 3, 4),)
    assert len(pi4.atoms) == 6
    assert pi4.is_atomic


def test_partition_lattice_cap() -> None:
    """Test that the partition lattice respects its cap."""
    with pytest.raises(SizeCapError):
        partition_lattice(8)
    with pytest.raises(InputError):
        partition_lattice(0)


def test_order_complex_of_partition_lattice(pi4: BoundedLattice) -> None:
    """Test that the proper part of Π4 is a wedge of six circles."""
    assert homology(order_complex(pi4.proper_part())).betti == (1, 6)


def test_not_a_lattice() -> None:
    """Test that the bounded bowtie is rejected with a witness pair."""
    bowtie = from_covers("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    with pytest.raises(NotALatticeError) as excinfo:
        as_lattice(with_bounds(bowtie))
    assert excinfo.value.pair is not None
    with pytest.raises(NotALatticeError, match="unique minimum"):
        as_lattice(bowtie)


def test_chain_lattice_is_not_atomic() -> None:
    """Test that a 4-chain has one atom and is not atomic."""
    L = chain_lattice(4)
    assert L.atoms == (1,)
    assert not L.is_atomic
    assert len(atomic_sublattice(L)) == 3
    with pytest.raises(InputError):
        chain_lattice(0)


def test_atomic_sublattice_is_idempotent() -> None:
    """Test that taking the atomic sublattice twice changes nothing."""
    La = atomic_sublattice(chain_lattice(4))
    assert set(atomic_sublattice(La).elements) == set(La.elements)
    assert La.top == 3


def test_order_complex_of_opposite(pi4: BoundedLattice) -> None:
    """Test that reversing the order leaves the order complex unchanged."""
    bar = pi4.proper_part()
    assert order_complex(bar.opposite()) == order_complex(bar)


def test_closure_system_lattice() -> None:
    """Test the lattice of an intersection-closed family."""
    L = closure_system_lattice([[1, 2], [2, 3]], [1, 2, 3])
    assert set(L.elements) == {(2,), (1, 2), (2, 3), (1, 2, 3)}
    assert L.bottom == (2,)
    assert L.join((1, 2), (2, 3)) == (1, 2, 3)
    assert L.meet((1, 2), (2, 3)) == (2,)
    assert L.atoms == ((1, 2), (2, 3))
    assert L.is_atomic
    chain = closure_system_lattice([[1], [1, 2]], [1, 2, 3])
    assert chain.atoms == ((1, 2),)
    assert not chain.is_atomic


def test_random_closure_lattice_is_seeded() -> None:
    """Test that equal seeds give equal lattices."""
    a = random_closure_lattice(np.random.default_rng(7), max_elements=10)
    b = random_closure_lattice(np.random.default_rng(7), max_elements=10)
    assert a.elements == b.elements
    assert a.poset == b.poset
    assert len(a) <= 10


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_lattice_laws(seed: int) -> None:
    """Test absorption and commutativity on random closure lattices."""
    L = random_closure_lattice(seed, max_elements=12)
    for x in L.elements:
        for y in L.elements:
            assert L.meet(x, y) == L.meet(y, x)
            assert L.join(x, L.meet(x, y)) == x
            assert L.meet(x, L.join(x, y)) == x
            assert L.le(L.meet(x, y), x)
