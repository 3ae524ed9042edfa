"""Graphs and the complexes built from their neighborhoods."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import networkx as nx

from simple_homotopy._complexes.common import EmptyComplexError, InputError, log
from simple_homotopy._complexes.lattice import BoundedLattice, NotALatticeError, as_lattice
from simple_homotopy._complexes.poset import (
    Poset,
    RegularCWPoset,
    order_complex,
    with_bounds,
)
from simple_homotopy._complexes.simplicial import Simplex, SimplicialComplex, faces_of
from simple_homotopy.utils import Label, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable


@dataclass(frozen=True, repr=False)
class Graph:
    """A finite undirected graph without multi-edges; loops are stored as ``(v, v)``."""

    vertices: tuple[Label, ...]
    edges: frozenset[tuple[Label, Label]] = field(default_factory=frozenset)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Label, Label]],
        vertices: Iterable[Label] = (),
    ) -> Graph:
        """Graph from an edge list; endpoints are added to ``vertices``."""
        canonical = {sort_labels((u, v)) if u != v else (u, u) for u, v in edges}
        all_vertices = set(vertices) | {v for e in canonical for v in e}
        return cls(sort_labels(all_vertices), frozenset(canonical))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        return cls.from_edges(graph.edges, graph.nodes)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def __repr__(self) -> str:
        return f"Graph(n_vertices={len(self.vertices)}, n_edges={len(self.edges)})"

    @functools.cached_property
    def _adjacency(self) -> dict[Label, frozenset[Label]]:
        adjacency: dict[Label, set[Label]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return {v: frozenset(n) for v, n in adjacency.items()}

    def neighbors(self, v: Label) -> frozenset[Label]:
        return self._adjacency[v]

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    @functools.cached_property
    def endpoints(self) -> frozenset[Label]:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)


def complete_graph(n: int) -> Graph:
    """``K_n`` on the vertices ``1, ..., n``."""
    return Graph.from_networkx(nx.complete_graph(range(1, n + 1)))


def cycle_graph(n: int) -> Graph:
    """``C_n`` on the vertices ``0, ..., n-1``."""
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> Graph:
    """The path ``1 - 2 - ... - n``."""
    return Graph.from_networkx(nx.path_graph(range(1, n + 1)))


def common_neighbors(G: Graph, vertices: Iterable[Label]) -> frozenset[Label]:
    """``N(S)``, the vertices adjacent to every member of ``S``.

    By convention ``N(∅)`` is the set of all edge endpoints.
    """
    result: frozenset[Label] | None = None
    for v in vertices:
        result = G.neighbors(v) if result is None else result & G.neighbors(v)
        if not result:
            return frozenset()
    return G.endpoints if result is None else result


def neighbor_closure(G: Graph, vertices: Iterable[Label]) -> frozenset[Label]:
    """``N(N(S))``, a closure operator on the faces of ``N(G)``."""
    return common_neighbors(G, common_neighbors(G, vertices))


def neighborhood_complex(G: Graph) -> SimplicialComplex:
    """``N(G)``: vertex sets with a common neighbor."""
    if not G.edges:
        msg = "The neighborhood complex of an edgeless graph is empty."
        raise EmptyComplexError(msg)
    return SimplicialComplex.from_predicate(
        G.endpoints,
        lambda s: bool(common_neighbors(G, s)),
    )


def neighbor_image(G: Graph) -> tuple[Simplex, ...]:
    """``Im N``: the faces ``N(A)`` for ``A`` a face of ``N(G)``, in canonical order."""
    faces = neighborhood_complex(G).sorted_simplices
    return sort_labels({sort_labels(common_neighbors(G, a)) for a in faces})


def _inclusion_poset(sets: Iterable[Simplex]) -> Poset:
    sets = list(sets)
    pairs = [(a, b) for a in sets for b in sets if len(a) < len(b) and set(a) < set(b)]
    return Poset.from_pairs(sets, pairs)


@dataclass(frozen=True, eq=False)
class LovaszComplex:
    """``Lo(G)`` together with the poset ``Im N`` and the involution ``A ↦ N(A)``."""

    complex: SimplicialComplex
    poset: Poset
    involution: dict[Simplex, Simplex]


def lovasz_complex(G: Graph) -> LovaszComplex:
    """``Lo(G) = Δ(Im N)``, the order complex of the image of ``N`` on faces of ``N(G)``."""
    image = neighbor_image(G)
    poset = _inclusion_poset(image)
    involution = {a: sort_labels(common_neighbors(G, a)) for a in image}
    return LovaszComplex(order_complex(poset), poset, involution)


@dataclass(frozen=True)
class InvolutionReport:
    """Result of `lovasz_involution_free`; ``free`` is ``None`` when skipped."""

    free: bool | None
    skipped: bool = False
    notice: str = ""
    fixed_simplex: tuple[Simplex, ...] | None = None


def lovasz_involution_free(G: Graph) -> InvolutionReport:
    """Check that ``A ↦ N(A)`` acts freely on ``Lo(G)``."""
    if G.has_loops:
        notice = "graph has loops; the action need not be free, check skipped"
        log.warning("involution check skipped", reason="loops")
        return InvolutionReport(free=None, skipped=True, notice=notice)
    lovasz = lovasz_complex(G)
    for simplex in lovasz.complex:
        image = frozenset(lovasz.involution[a] for a in simplex)
        if image == frozenset(simplex):
            return InvolutionReport(free=False, fixed_simplex=simplex)
    return InvolutionReport(free=True)


@dataclass(frozen=True)
class BipartitePair:
    """A complete bipartite pair ``(A, B)``: ``A × B ⊆ E(G)``."""

    A: Simplex
    B: Simplex

    @property
    def label(self) -> tuple[Simplex, Simplex]:
        return (self.A, self.B)

    @property
    def dim(self) -> int:
        return len(self.A) + len(self.B) - 2


def hom_k2(G: Graph) -> RegularCWPoset:
    """``Hom(K₂, G)`` as the poset of its cells, the complete bipartite pairs.

    Cells are labelled ``(A, B)`` with both parts as sorted tuples and are
    ordered componentwise by inclusion.
    """
    faces = neighborhood_complex(G).sorted_simplices
    cells: list[BipartitePair] = []
    for a in faces:
        neighbors = sort_labels(common_neighbors(G, a))
        cells.extend(BipartitePair(a, b) for b in faces_of(neighbors))
    pairs = [
        ((a, b), cell.label)
        for cell in cells
        for a in faces_of(cell.A)
        for b in faces_of(cell.B)
        if (a, b) != cell.label
    ]
    poset = Poset.from_pairs([c.label for c in cells], pairs)
    log.debug("enumerated hom complex", n_cells=len(cells))
    return RegularCWPoset(
        poset,
        dims={c.label: c.dim for c in cells},
        payloads={c.label: c for c in cells},
    )


def hom_k2_lattice(G: Graph) -> BoundedLattice:
    """``P := F^op(Hom(K₂, G)) ∪ {0̂, 1̂}`` as a lattice."""
    hom = hom_k2(G)
    try:
        return as_lattice(with_bounds(hom.poset.opposite()))
    except NotALatticeError as e:
        log.warning("hom lattice check failed", pair=e.pair)
        raise


def gamma_p_description(G: Graph) -> SimplicialComplex:
    """``Γ(P)`` built directly from the graph.

    Vertices are the pairs ``(A, B)`` with ``N(A) = B`` and ``N(B) = A``; a
    set of them is a simplex iff the ``A``'s and the ``B``'s both have a
    common element.
    """
    vertices = []
    for a in neighbor_image(G):
        b = sort_labels(common_neighbors(G, a))
        if sort_labels(common_neighbors(G, b)) == a:
            vertices.append((a, b))

    def is_simplex(s: Simplex) -> bool:
        return bool(
            set.intersection(*(set(a) for a, _ in s))
            and set.intersection(*(set(b) for _, b in s)),
        )

    return SimplicialComplex.from_predicate(vertices, is_simplex)


def image_lattice(G: Graph) -> BoundedLattice:
    """``Im N`` ordered by inclusion with a bottom and a top attached."""
    try:
        return as_lattice(with_bounds(_inclusion_poset(neighbor_image(G))))
    except NotALatticeError as e:
        log.warning("image lattice check failed", pair=e.pair)
        raise


def disconnected_graphs_complex(n: int) -> SimplicialComplex:
    """``DG_n``: edge sets on ``{1, ..., n}`` whose graph is disconnected.

    Vertices are the pairs ``(i, j)`` with ``i < j``. For ``n = 2`` no edge
    set qualifies and the empty complex is returned.
    """
    if n < 2:  # noqa: PLR2004
        msg = "DG_n needs n >= 2."
        raise InputError(msg)
    nodes = range(1, n + 1)

    def is_simplex(s: Simplex) -> bool:
        graph = nx.Graph()
        graph.add_nodes_from(nodes)
        graph.add_edges_from(s)
        return not nx.is_connected(graph)

    pairs = list(itertools.combinations(nodes, 2))
    result = SimplicialComplex.from_predicate(pairs, is_simplex)
    if result.is_empty:
        log.warning("empty complex", complex="DG_n", n=n)
    return result


def partition_atom_pair(atom: tuple[tuple[int, ...], ...]) -> tuple[int, int]:
    """The 2-block ``(i, j)`` of an atom of the partition lattice."""
    blocks = [b for b in atom if len(b) == 2]  # noqa: PLR2004
    if len(blocks) != 1 or any(len(b) > 2 for b in atom):  # noqa: PLR2004
        msg = f"{atom!r} is not an atom of a partition lattice."
        raise InputError(msg)
    i, j = blocks[0]
    return (i, j)
