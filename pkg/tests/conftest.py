"""Shared fixtures for the test-suite."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import pytest

from simple_homotopy._complexes.graph import complete_graph
from simple_homotopy._complexes.lattice import boolean_lattice, partition_lattice
from simple_homotopy._complexes.simplicial import SimplicialComplex

from .helpers import RP2_FACETS, named_graphs

if TYPE_CHECKING:
    from collections.abc import Generator

    from simple_homotopy._complexes.graph import Graph
    from simple_homotopy._complexes.lattice import BoundedLattice


@pytest.fixture()
def k3() -> Graph:
    """The triangle graph."""
    return complete_graph(3)


@pytest.fixture(params=list(named_graphs()))
def small_graph(request: pytest.FixtureRequest) -> Graph:
    """The named small connected graphs, one per parameter."""
    return named_graphs()[request.param]


@pytest.fixture()
def b3() -> BoundedLattice:
    """The Boolean lattice of subsets of {1, 2, 3}."""
    return boolean_lattice(3)


@pytest.fixture()
def pi4() -> BoundedLattice:
    """The partition lattice of {1, 2, 3, 4}."""
    return partition_lattice(4)


@pytest.fixture()
def triangle() -> SimplicialComplex:
    """A single 2-simplex."""
    return SimplicialComplex.from_facets([[1, 2, 3]])


@pytest.fixture()
def circle() -> SimplicialComplex:
    """The boundary of a triangle."""
    return SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])


@pytest.fixture()
def rp2() -> SimplicialComplex:
    """The six-vertex real projective plane."""
    return SimplicialComplex.from_facets(RP2_FACETS)


@pytest.fixture()
def _quiet_logs() -> Generator[None, None, None]:
    """Silence the package loggers for tests that trigger warnings on purpose."""
    logger = logging.getLogger("simple_homotopy")
    level = logger.level
    logger.setLevel(logging.ERROR)
    yield
    logger.setLevel(level)
