"""Helpers shared by the tests."""

from __future__ import annotations

import dataclasses
import itertools
import json
from typing import TYPE_CHECKING

import networkx as nx
import numpy as np

from simple_homotopy._complexes.graph import Graph, complete_graph, cycle_graph, path_graph
from simple_homotopy._complexes.lattice import random_closure_lattice
from simple_homotopy._complexes.simplicial import SimplicialComplex

if TYPE_CHECKING:
    from pathlib import Path

    from simple_homotopy._complexes.lattice import BoundedLattice
    from simple_homotopy._deformations.certificate import DeformationCertificate

RP2_FACETS = [
    [1, 2, 4],
    [1, 2, 6],
    [1, 3, 5],
    [1, 3, 6],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 5, 6],
    [3, 4, 6],
    [4, 5, 6],
]


def write_edge_list(G: Graph, path: Path) -> Path:
    """Write ``G`` in the plain ``u v`` per line format."""
    lines = ["# edge list"] + [f"{u} {v}" for u, v in sorted(G.edges)]
    path.write_text("\n".join(lines) + "\n")
    return path


def write_lattice_file(L: BoundedLattice, path: Path) -> Path:
    """Write ``L`` in the JSON covers format, elements encoded as nested lists."""
    from simple_homotopy.utils import encode_label

    data = {
        "elements": [encode_label(x) for x in L.elements],
        "covers": [[encode_label(x), encode_label(y)] for x, y in L.poset.covers],
    }
    path.write_text(json.dumps(data))
    return path


def write_facets(facets: list[list[int]], path: Path) -> Path:
    """Write a complex as one facet per line."""
    path.write_text("\n".join(" ".join(map(str, f)) for f in facets) + "\n")
    return path


def replace_step(cert: DeformationCertificate, index: int, **changes: object) -> DeformationCertificate:
    """A copy of ``cert`` with step ``index`` modified."""
    steps = list(cert.steps)
    steps[index] = dataclasses.replace(steps[index], **changes)
    return dataclasses.replace(cert, steps=tuple(steps))


def truncate(cert: DeformationCertificate, n_steps: int) -> DeformationCertificate:
    """A copy of ``cert`` keeping only its first ``n_steps`` steps but the same end."""
    return dataclasses.replace(cert, steps=cert.steps[:n_steps])


def facet_set(K: SimplicialComplex) -> set[tuple]:
    return set(K.facets)


def closed(*facets: list) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def named_graphs() -> dict[str, Graph]:
    """The small named graphs every graph pipeline is checked on."""
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "P4": path_graph(4),
    }


def random_connected_graphs(count: int, *, max_vertices: int = 6, seed: int = 0) -> list[Graph]:
    """Seeded connected graphs with at most one edge beyond a spanning tree."""
    rng = np.random.default_rng(seed)
    graphs: list[Graph] = []
    while len(graphs) < count:
        n = int(rng.integers(3, max_vertices + 1))
        m = min(int(rng.integers(n - 1, n + 1)), n * (n - 1) // 2)
        g = nx.gnm_random_graph(n, m, seed=int(rng.integers(2**31)))
        if nx.is_connected(g):
            graphs.append(Graph.from_networkx(nx.convert_node_labels_to_integers(g, first_label=1)))
    return graphs


def random_non_atomic_lattices(count: int, *, seed: int = 0) -> list[BoundedLattice]:
    """Seeded closure lattices with at least four elements that are not atomic."""
    rng = np.random.default_rng(seed)
    lattices: list[BoundedLattice] = []
    while len(lattices) < count:
        L = random_closure_lattice(rng, max_elements=12)
        if len(L) >= 4 and not L.is_atomic:  # noqa: PLR2004
            lattices.append(L)
    return lattices


def complexes_on_four_vertices() -> list[SimplicialComplex]:
    """Every nonempty complex whose vertices lie in {1, 2, 3, 4}.

    Each one is the closure of an antichain of nonempty vertex sets.
    """
    sets = [s for k in range(1, 5) for s in itertools.combinations(range(1, 5), k)]
    complexes = []
    for mask in range(1, 2 ** len(sets)):
        chosen = [s for i, s in enumerate(sets) if mask >> i & 1]
        if all(not set(a) < set(b) for a in chosen for b in chosen):
            complexes.append(SimplicialComplex.from_facets(chosen))
    return complexes
