"""Tests for `simple_homotopy._complexes.crosscut`."""

from __future__ import annotations

import numpy as np
import pytest

from simple_homotopy._complexes.common import EmptyComplexError, InputError
from simple_homotopy._complexes.crosscut import (
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
from simple_homotopy._complexes.graph import disconnected_graphs_complex, partition_atom_pair
from simple_homotopy._complexes.lattice import BoundedLattice, chain_lattice, partition_lattice
from simple_homotopy._complexes.poset import order_complex
from simple_homotopy.homology import homology, homology_equal


def test_is_crosscut(b3: BoundedLattice) -> None:
    """Test the three ways a set can fail to be a crosscut."""
    assert is_crosscut(b3, b3.atoms)
    assert is_crosscut(b3, b3.coatoms)
    comparable = is_crosscut(b3, [(1,), (1, 2)])
    assert not comparable
    assert comparable.comparable_pairs == (((1,), (1, 2)),)
    unsaturated = is_crosscut(b3, [(1,), (2,)])
    assert not unsaturated
    assert unsaturated.unsaturated_chains
    outside = is_crosscut(b3, [()])
    assert outside.outside_proper_part == ((),)
    with pytest.raises(InputError, match="not a crosscut"):
        make_crosscut(b3, [(1,)])


def test_atom_crosscut_complex_of_pi3() -> None:
    """Test that Γ(Π3) is three points."""
    gamma = atom_crosscut_complex(partition_lattice(3))
    assert gamma.f_vector() == (3,)
    assert homology(gamma).betti == (3,)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_disconnected_graphs_complex_is_atom_crosscut_complex(n: int) -> None:
    """Test that DG_n equals Γ(Π_n) once atoms are named by their 2-block."""
    gamma = atom_crosscut_complex(partition_lattice(n)).relabel(partition_atom_pair)
    assert gamma == disconnected_graphs_complex(n)


def test_atom_crosscut_complex_needs_atoms() -> None:
    """Test that a two-element lattice has no atom crosscut complex."""
    with pytest.raises(EmptyComplexError):
        atom_crosscut_complex(chain_lattice(2))


def test_crosscut_complex_of_coatoms(b3: BoundedLattice) -> None:
    """Test that the coatom crosscut complex of B3 is a circle."""
    gamma = crosscut_complex(b3, coatoms_crosscut(b3))
    assert gamma.f_vector() == (3, 3)
    assert homology_equal(gamma, order_complex(b3.proper_part()))


def test_bounded_below_complex(b3: BoundedLattice) -> None:
    """Test the f-vector of J(B3)."""
    J = bounded_below_complex(b3)
    assert J.f_vector() == (6, 9, 3)
    assert J.euler_characteristic() == 0


def test_crosscut_sublattice(pi4: BoundedLattice) -> None:
    """Test that the atoms of an atomic lattice generate all of it."""
    assert len(crosscut_sublattice(pi4, atoms_crosscut(pi4))) == len(pi4)


def test_crosscut_map_is_idempotent() -> None:
    """Test the retraction of a chain onto its crosscut sublattice."""
    L = chain_lattice(5)
    crosscut = make_crosscut(L, [2])
    phi = crosscut_map(L, crosscut)
    assert phi.is_idempotent
    assert phi.values == {0: 0, 1: 2, 2: 2, 3: 2, 4: 4}
    assert phi.image == frozenset(crosscut_sublattice(L, crosscut).elements)


def test_crosscut_stage_maps() -> None:
    """Test that the two stages are an ascending and a descending retraction."""
    L = chain_lattice(5)
    ascending, descending = crosscut_stage_maps(L, make_crosscut(L, [2]))
    assert ascending.kind == "ascending"
    assert descending.kind == "descending"
    assert ascending.fixed_points == (2, 3)
    assert descending.fixed_points == (2,)
    assert descending.domain == L.proper_part().induced(ascending.fixed_points)


def test_random_crosscut_is_seeded(pi4: BoundedLattice) -> None:
    """Test that random crosscuts are valid and reproducible."""
    a = random_crosscut(pi4, np.random.default_rng(3))
    b = random_crosscut(pi4, np.random.default_rng(3))
    assert a.members == b.members
    assert is_crosscut(pi4, a.members)
    with pytest.raises(InputError):
        random_crosscut(chain_lattice(2), np.random.default_rng(0))
