"""Finite abstract simplicial complexes and their subdivisions."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import toolz

from simple_homotopy._complexes.common import EmptyComplexError, InputError, log
from simple_homotopy.utils import Label, simplex_key, sort_labels

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping

Simplex = tuple[Label, ...]


def make_simplex(vertices: Iterable[Label]) -> Simplex:
    """Canonical form of a simplex: the sorted tuple of its distinct vertices."""
    simplex = sort_labels(set(vertices))
    if not simplex:
        msg = "A simplex needs at least one vertex."
        raise InputError(msg)
    return simplex


def faces_of(simplex: Simplex, *, proper: bool = False) -> Iterator[Simplex]:
    """All nonempty faces of ``simplex`` (which must be canonical)."""
    top = len(simplex) - 1 if proper else len(simplex)
    for size in range(1, top + 1):
        yield from itertools.combinations(simplex, size)


def facets_of(simplex: Simplex) -> tuple[Simplex, ...]:
    """The codimension-one faces; empty for a vertex."""
    if len(simplex) == 1:
        return ()
    return tuple(simplex[:i] + simplex[i + 1 :] for i in range(len(simplex)))


@dataclass(frozen=True, repr=False)
class SimplicialComplex:
    """A finite abstract simplicial complex stored as its closed family of simplices.

    Every simplex is a canonical (label-sorted) tuple of vertices. Instances
    are immutable; use the class methods to construct them, these guarantee
    that the family is closed under taking faces.
    """

    simplices: frozenset[Simplex] = field(default_factory=frozenset)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
        """Smallest complex that contains all ``facets``."""
        simplices: set[Simplex] = set()
        for facet in facets:
            simplex = make_simplex(facet)
            if simplex not in simplices:
                simplices.update(faces_of(simplex))
        return cls(frozenset(simplices))

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Iterable[Label]],
        *,
        check: bool = True,
    ) -> SimplicialComplex:
        """Complex from an explicit family of simplices, verified to be closed."""
        family = frozenset(make_simplex(s) for s in simplices)
        if check:
            for simplex in sorted(family, key=simplex_key):
                missing = next((f for f in facets_of(simplex) if f not in family), None)
                if missing is not None:
                    msg = f"Family is not closed: {simplex} is present but its face {missing} is not."
                    raise InputError(msg)
        return cls(family)

    @classmethod
    def from_predicate(
        cls,
        vertices: Iterable[Label],
        is_simplex: Callable[[Simplex], bool],
    ) -> SimplicialComplex:
        """Complex of all vertex sets accepted by a downward-closed predicate.

        The predicate is only evaluated on sets whose facets were accepted,
        so the enumeration is output-sensitive.
        """
        ordered = sort_labels(set(vertices))
        found: list[Simplex] = []

        def extend(simplex: Simplex, start: int) -> None:
            for i in range(start, len(ordered)):
                candidate = (*simplex, ordered[i])
                if is_simplex(candidate):
                    found.append(candidate)
                    extend(candidate, i + 1)

        extend((), 0)
        return cls(frozenset(found))

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_simplices)

    def __contains__(self, simplex: object) -> bool:
        return simplex in self.simplices

    @functools.cached_property
    def sorted_simplices(self) -> tuple[Simplex, ...]:
        """Simplices ordered by dimension, then lexicographically."""
        return tuple(sorted(self.simplices, key=simplex_key))

    @functools.cached_property
    def vertices(self) -> tuple[Label, ...]:
        return sort_labels(s[0] for s in self.simplices if len(s) == 1)

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(s) for s in self.simplices), default=0) - 1

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def cofaces(self, simplex: Simplex) -> frozenset[Simplex]:
        """All simplices containing ``simplex`` (including itself)."""
        if simplex not in self.simplices:
            return frozenset()
        vertex_set = frozenset(simplex)
        return frozenset(s for s in self.simplices if vertex_set.issubset(s))

    @functools.cached_property
    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices in canonical order."""
        covered = {f for s in self.simplices for f in facets_of(s)}
        return tuple(s for s in self.sorted_simplices if s not in covered)

    def faces_of_dim(self, d: int) -> tuple[Simplex, ...]:
        return tuple(s for s in self.sorted_simplices if len(s) == d + 1)

    def f_vector(self) -> tuple[int, ...]:
        """Number of simplices per dimension, starting at dimension 0."""
        counts = toolz.countby(len, self.simplices)
        return tuple(counts.get(d + 1, 0) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic."""
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def is_subcomplex(self, other: SimplicialComplex) -> bool:
        """Whether ``self`` is a subcomplex of ``other``."""
        return self.simplices <= other.simplices

    def induced(self, vertices: Iterable[Label]) -> SimplicialComplex:
        """Induced subcomplex on a vertex subset."""
        keep = set(vertices)
        return SimplicialComplex(frozenset(s for s in self.simplices if keep.issuperset(s)))

    def relabel(self, mapping: Mapping[Label, Label] | Callable[[Label], Label]) -> SimplicialComplex:
        """Rename vertices through an injective map; unmapped vertices keep their label."""
        rename = _as_renamer(mapping, self.vertices)
        return SimplicialComplex(
            frozenset(sort_labels(rename(v) for v in s) for s in self.simplices),
        )


def _as_renamer(
    mapping: Mapping[Label, Label] | Callable[[Label], Label],
    vertices: Iterable[Label],
) -> Callable[[Label], Label]:
    """Turn ``mapping`` into a function and check that it is injective on ``vertices``."""
    if callable(mapping):
        table = {v: mapping(v) for v in vertices}
    else:
        table = {v: mapping.get(v, v) for v in vertices}
    seen: dict[Label, Label] = {}
    for v in sort_labels(table):
        image = table[v]
        if image in seen:
            msg = f"Relabelling is not injective: {seen[image]!r} and {v!r} both map to {image!r}."
            raise InputError(msg)
        seen[image] = v
    return table.__getitem__


def from_facets(facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    """Smallest simplicial complex containing all ``facets``.

    Parameters
    ----------
    facets
        Vertex sets. Vertices are integers, strings or (nested) tuples of those.

    Returns
    -------
    SimplicialComplex
        The closure of the facets in canonical form.

    """
    return SimplicialComplex.from_facets(facets)


def _require_simplex(K: SimplicialComplex, simplex: Iterable[Label]) -> Simplex:
    sigma = make_simplex(simplex)
    if sigma not in K:
        msg = f"{sigma} is not a simplex of {K}."
        raise InputError(msg)
    return sigma


def link(K: SimplicialComplex, simplex: Iterable[Label]) -> SimplicialComplex:
    """The link ``{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`` (possibly empty)."""
    sigma = _require_simplex(K, simplex)
    inside = set(sigma)
    return SimplicialComplex(
        frozenset(
            tuple(v for v in tau if v not in inside) for tau in K.cofaces(sigma) if tau != sigma
        ),
    )


def star(K: SimplicialComplex, simplex: Iterable[Label]) -> SimplicialComplex:
    """The closed star: the closure of all cofaces of ``σ``."""
    sigma = _require_simplex(K, simplex)
    return SimplicialComplex.from_facets(K.cofaces(sigma))


def cone(K: SimplicialComplex, apex: Label) -> SimplicialComplex:
    """The cone ``apex * K``."""
    if apex in K.vertices:
        msg = f"Apex {apex!r} is already a vertex."
        raise InputError(msg)
    simplices = set(K.simplices)
    simplices.add((apex,))
    simplices.update(make_simplex((*s, apex)) for s in K.simplices)
    return SimplicialComplex(frozenset(simplices))


def stellar_subdivision(
    K: SimplicialComplex,
    simplex: Iterable[Label],
    apex: Label | None = None,
) -> SimplicialComplex:
    """Stellar subdivision ``sd(K, σ)``.

    The open star of ``σ`` is removed and replaced by the cone from a new
    vertex over ``∂σ * lk(σ)``.

    Parameters
    ----------
    K
        The complex.
    simplex
        The simplex ``σ`` to subdivide.
    apex
        Label of the new vertex; defaults to the tuple of ``σ``'s vertices,
        so that repeated subdivision along faces yields barycentric labels.

    Returns
    -------
    SimplicialComplex

    """
    sigma = _require_simplex(K, simplex)
    v = sigma if apex is None else apex
    if v in K.vertices:
        msg = f"Apex label {v!r} collides with an existing vertex."
        raise InputError(msg)
    cofaces = K.cofaces(sigma)
    inside = set(sigma)
    lk = {tuple(x for x in tau if x not in inside) for tau in cofaces if tau != sigma}
    lk.add(())
    boundary = [(), *faces_of(sigma, proper=True)]
    added = {sort_labels((*alpha, *beta, v)) for alpha in boundary for beta in lk}
    return SimplicialComplex((K.simplices - cofaces) | added)


def _chains_below(face: Simplex, cache: dict[Simplex, list[tuple[Simplex, ...]]]) -> list:
    if face not in cache:
        chains = [(face,)]
        for sub in faces_of(face, proper=True):
            chains.extend((*c, face) for c in _chains_below(sub, cache))
        cache[face] = chains
    return cache[face]


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """``Bd K``: vertices are the faces of ``K``, simplices the chains of faces."""
    if K.is_empty:
        msg = "Cannot subdivide the empty complex."
        raise EmptyComplexError(msg)
    cache: dict[Simplex, list[tuple[Simplex, ...]]] = {}
    simplices = {sort_labels(chain) for face in K.simplices for chain in _chains_below(face, cache)}
    log.debug("barycentric subdivision", n_faces=len(K), n_simplices=len(simplices))
    return SimplicialComplex(frozenset(simplices))


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face numbers ``(f_0, f_1, ...)`` of ``K``."""
    return K.f_vector()


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of the f-vector."""
    return K.euler_characteristic()
