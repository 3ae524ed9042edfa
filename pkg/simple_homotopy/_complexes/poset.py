"""Finite posets, order complexes, monotone maps and face posets."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

import networkx as nx
import numpy as np

from simple_homotopy._complexes.common import InputError, log
from simple_homotopy._complexes.simplicial import SimplicialComplex, faces_of
from simple_homotopy.utils import Label, label_key, simplex_key, sort_labels

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0


class Poset:
    """A finite poset stored as a dense strict-order matrix.

    Elements are kept in canonical label order; ``_lt[i, j]`` is true iff
    ``elements[i] < elements[j]``. Use `from_covers`, `from_relation` or
    `Poset.from_pairs` to build one.

    Parameters
    ----------
    elements
        Element labels.
    less
        Boolean matrix of the strict order, indexed like ``elements``.
    redundant_covers
        Cover pairs that were given but are implied by transitivity.

    """

    def __init__(
        self,
        elements: Iterable[Label],
        less: np.ndarray,
        *,
        redundant_covers: Iterable[tuple[Label, Label]] = (),
    ) -> None:
        elements = tuple(elements)
        order = np.array(
            sorted(range(len(elements)), key=lambda i: label_key(elements[i])),
            dtype=int,
        )
        self.elements: tuple[Label, ...] = tuple(elements[i] for i in order)
        if len(set(self.elements)) != len(self.elements):
            msg = "Poset elements must be distinct."
            raise InputError(msg)
        lt = np.asarray(less, dtype=bool).reshape(len(elements), len(elements))
        self._lt = lt[np.ix_(order, order)].copy()
        self._lt.flags.writeable = False
        self._index = {x: i for i, x in enumerate(self.elements)}
        self.redundant_covers = tuple(redundant_covers)

    @classmethod
    def from_pairs(
        cls,
        elements: Iterable[Label],
        pairs: Iterable[tuple[Label, Label]],
    ) -> Poset:
        """Poset from an already transitive list of strict pairs ``(x, y)`` with ``x < y``."""
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        less = np.zeros((len(elements), len(elements)), dtype=bool)
        for x, y in pairs:
            less[index[x], index[y]] = True
        return cls(elements, less)

    def __repr__(self) -> str:
        return f"Poset(n_elements={len(self)})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and bool(np.array_equal(self._lt, other._lt))

    __hash__ = None  # type: ignore[assignment]

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except KeyError:
            msg = f"{x!r} is not an element of the poset."
            raise InputError(msg) from None

    def lt(self, x: Label, y: Label) -> bool:
        return bool(self._lt[self.index(x), self.index(y)])

    def le(self, x: Label, y: Label) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x: Label, y: Label) -> bool:
        return self.le(x, y) or self.lt(y, x)

    @functools.cached_property
    def _up(self) -> dict[Label, frozenset[Label]]:
        return {
            x: frozenset(self.elements[j] for j in np.flatnonzero(self._lt[i]))
            for i, x in enumerate(self.elements)
        }

    @functools.cached_property
    def _down(self) -> dict[Label, frozenset[Label]]:
        return {
            x: frozenset(self.elements[j] for j in np.flatnonzero(self._lt[:, i]))
            for i, x in enumerate(self.elements)
        }

    def up_set(self, x: Label) -> frozenset[Label]:
        """Elements strictly above ``x``."""
        return self._up[x]

    def down_set(self, x: Label) -> frozenset[Label]:
        """Elements strictly below ``x``."""
        return self._down[x]

    @functools.cached_property
    def _cover_matrix(self) -> np.ndarray:
        return self._lt & ~_bool_matmul(self._lt, self._lt)

    @functools.cached_property
    def covers(self) -> tuple[tuple[Label, Label], ...]:
        """Cover pairs ``(x, y)``, ``x ⋖ y``, in canonical order."""
        rows, cols = np.nonzero(self._cover_matrix)
        pairs = [(self.elements[i], self.elements[j]) for i, j in zip(rows, cols)]
        return tuple(sorted(pairs, key=lambda p: (label_key(p[0]), label_key(p[1]))))

    def lower_covers(self, x: Label) -> tuple[Label, ...]:
        i = self.index(x)
        return tuple(self.elements[j] for j in np.flatnonzero(self._cover_matrix[:, i]))

    def upper_covers(self, x: Label) -> tuple[Label, ...]:
        i = self.index(x)
        return tuple(self.elements[j] for j in np.flatnonzero(self._cover_matrix[i]))

    @functools.cached_property
    def rank(self) -> dict[Label, int]:
        """Length of the longest chain ending in each element."""
        n_below = self._lt.sum(axis=0)
        rank: dict[Label, int] = {}
        for i in np.argsort(n_below, kind="stable"):
            x = self.elements[i]
            rank[x] = max((rank[y] + 1 for y in self._down[x]), default=0)
        return rank

    @functools.cached_property
    def linear_extension(self) -> tuple[Label, ...]:
        """Deterministic linear extension: by rank, then by label."""
        return tuple(sorted(self.elements, key=lambda x: (self.rank[x], label_key(x))))

    @property
    def minimal_elements(self) -> tuple[Label, ...]:
        return tuple(x for x in self.elements if not self._down[x])

    @property
    def maximal_elements(self) -> tuple[Label, ...]:
        return tuple(x for x in self.elements if not self._up[x])

    def opposite(self) -> Poset:
        """``P^op``, the same elements with the order reversed."""
        return Poset(self.elements, self._lt.T)

    def induced(self, subset: Iterable[Label]) -> Poset:
        """Subposet with the induced order."""
        keep = sort_labels(set(subset))
        idx = np.array([self.index(x) for x in keep], dtype=int)
        return Poset(keep, self._lt[np.ix_(idx, idx)])

    def is_chain(self, subset: Iterable[Label]) -> bool:
        items = list(subset)
        return all(
            self.comparable(x, y) for k, x in enumerate(items) for y in items[k + 1 :]
        )

    def is_antichain(self, subset: Iterable[Label]) -> bool:
        items = list(subset)
        return not any(
            self.comparable(x, y) for k, x in enumerate(items) for y in items[k + 1 :]
        )

    def chains(self) -> list[tuple[Label, ...]]:
        """All nonempty chains, each listed bottom to top."""
        position = {x: i for i, x in enumerate(self.linear_extension)}
        found: list[tuple[Label, ...]] = []

        def extend(chain: tuple[Label, ...], candidates: list[Label]) -> None:
            for k, y in enumerate(candidates):
                new = (*chain, y)
                found.append(new)
                above = self._up[y]
                extend(new, [z for z in candidates[k + 1 :] if z in above])

        extend((), sorted(self.elements, key=position.__getitem__))
        return found

    def maximal_chains(self) -> list[tuple[Label, ...]]:
        """All maximal chains, following cover relations from minimal to maximal elements."""
        found: list[tuple[Label, ...]] = []
        stack = [(x,) for x in reversed(self.minimal_elements)]
        while stack:
            chain = stack.pop()
            ups = self.upper_covers(chain[-1])
            if not ups:
                found.append(chain)
            stack.extend((*chain, y) for y in reversed(ups))
        return found


def from_covers(
    elements: Iterable[Label],
    covers: Iterable[tuple[Label, Label]],
) -> Poset:
    """Poset generated by a cover relation.

    Parameters
    ----------
    elements
        All elements, including isolated ones.
    covers
        Pairs ``(lower, upper)``. Pairs implied by transitivity are accepted,
        normalized away and reported in ``Poset.redundant_covers``.

    Returns
    -------
    Poset

    """
    elements = sort_labels(set(elements))
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for lower, upper in covers:
        for x in (lower, upper):
            if x not in graph:
                msg = f"Cover ({lower!r}, {upper!r}) mentions unknown element {x!r}."
                raise InputError(msg)
        graph.add_edge(lower, upper)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        msg = f"Cover relation has a cycle: {cycle}."
        raise InputError(msg)
    closure = nx.transitive_closure_dag(graph)
    reduction = nx.transitive_reduction(graph)
    redundant = sorted(
        set(graph.edges) - set(reduction.edges),
        key=lambda p: (label_key(p[0]), label_key(p[1])),
    )
    if redundant:
        log.warning("normalized non-minimal covers", redundant=redundant)
    index = {x: i for i, x in enumerate(elements)}
    less = np.zeros((len(elements), len(elements)), dtype=bool)
    for x, y in closure.edges:
        less[index[x], index[y]] = True
    return Poset(elements, less, redundant_covers=redundant)


def from_relation(
    elements: Iterable[Label],
    less_than: Callable[[Label, Label], bool],
    *,
    check: bool = True,
) -> Poset:
    """Poset from a strict order predicate, verified to be a strict partial order."""
    elements = sort_labels(set(elements))
    less = np.array(
        [[x != y and less_than(x, y) for y in elements] for x in elements],
        dtype=bool,
    ).reshape(len(elements), len(elements))
    if check:
        if np.any(less & less.T):
            i, j = np.argwhere(less & less.T)[0]
            msg = f"Relation is not antisymmetric: {elements[i]!r}, {elements[j]!r}."
            raise InputError(msg)
        violations = _bool_matmul(less, less) & ~less
        if np.any(violations):
            i, j = np.argwhere(violations)[0]
            msg = f"Relation is not transitive: {elements[i]!r} < ... < {elements[j]!r}."
            raise InputError(msg)
    return Poset(elements, less)


def with_bounds(P: Poset, bottom: Label = "_0", top: Label = "_1") -> Poset:
    """Adjoin a new minimum ``bottom`` and a new maximum ``top``."""
    for label in (bottom, top):
        if label in P:
            msg = f"Bound label {label!r} collides with an element."
            raise InputError(msg)
    n = len(P)
    less = np.zeros((n + 2, n + 2), dtype=bool)
    less[:n, :n] = P._lt
    less[n, :n] = True
    less[:n, n + 1] = True
    less[n, n + 1] = True
    return Poset((*P.elements, bottom, top), less)


def opposite(P: Poset) -> Poset:
    """``P^op``."""
    return P.opposite()


def linear_extension(P: Poset) -> tuple[Label, ...]:
    """Linear extension ordered by rank, ties broken lexicographically."""
    return P.linear_extension


def order_complex(P: Poset) -> SimplicialComplex:
    """``Δ(P)``: the simplicial complex of nonempty chains of ``P``."""
    return SimplicialComplex(frozenset(sort_labels(c) for c in P.chains()))


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    """An order-preserving self-map with every element comparable to its image.

    Validated on construction; raises `InputError` otherwise.
    """

    domain: Poset
    values: Mapping[Label, Label] = field(repr=False)

    def __post_init__(self) -> None:
        if set(self.values) != set(self.domain.elements):
            msg = "A monotone map must be defined on every element of its domain."
            raise InputError(msg)
        n = len(self.domain)
        image = np.array([self.domain.index(self.values[x]) for x in self.domain.elements], dtype=int)
        le = self.domain._lt | np.eye(n, dtype=bool)
        idx = np.arange(n)
        incomparable = ~(le[idx, image] | le[image, idx])
        if np.any(incomparable):
            x = self.domain.elements[int(np.flatnonzero(incomparable)[0])]
            msg = f"{x!r} is not comparable with its image {self.values[x]!r}."
            raise InputError(msg)
        broken = self.domain._lt & ~le[np.ix_(image, image)]
        if np.any(broken):
            i, j = np.argwhere(broken)[0]
            x, y = self.domain.elements[i], self.domain.elements[j]
            msg = f"Map is not order-preserving on {x!r} < {y!r}."
            raise InputError(msg)

    @classmethod
    def from_function(cls, domain: Poset, func: Callable[[Label], Label]) -> MonotoneMap:
        return cls(domain, {x: func(x) for x in domain.elements})

    def __call__(self, x: Label) -> Label:
        return self.values[x]

    @functools.cached_property
    def is_ascending(self) -> bool:
        return all(self.domain.le(x, y) for x, y in self.values.items())

    @functools.cached_property
    def is_descending(self) -> bool:
        return all(self.domain.le(y, x) for x, y in self.values.items())

    @property
    def kind(self) -> Literal["ascending", "descending", "mixed"]:
        if self.is_ascending:
            return "ascending"
        if self.is_descending:
            return "descending"
        return "mixed"

    @functools.cached_property
    def is_idempotent(self) -> bool:
        return all(self.values[y] == y for y in self.values.values())

    @property
    def fixed_points(self) -> tuple[Label, ...]:
        return tuple(x for x in self.domain.elements if self.values[x] == x)

    @property
    def image(self) -> frozenset[Label]:
        return frozenset(self.values.values())

    def then(self, other: MonotoneMap) -> MonotoneMap:
        """The composite ``x ↦ other(self(x))``."""
        return MonotoneMap(self.domain, {x: other(self(x)) for x in self.domain.elements})


@dataclass(frozen=True, eq=False)
class RegularCWPoset:
    """Graded face poset of a regular CW complex; each cell carries a payload."""

    poset: Poset
    dims: Mapping[Label, int] = field(repr=False)
    payloads: Mapping[Label, Any] = field(repr=False)

    def __post_init__(self) -> None:
        for x, y in self.poset.covers:
            if self.dims[x] >= self.dims[y]:
                msg = f"Face relation {x!r} < {y!r} does not increase dimension."
                raise InputError(msg)

    @property
    def cells(self) -> tuple[Label, ...]:
        return self.poset.elements

    def f_vector(self) -> tuple[int, ...]:
        top = max(self.dims.values(), default=-1)
        counts = [0] * (top + 1)
        for d in self.dims.values():
            counts[d] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))


def face_poset(K: SimplicialComplex) -> RegularCWPoset:
    """``F(K)``: nonempty simplices of ``K`` ordered by strict inclusion."""
    simplices = sorted(K.simplices, key=simplex_key)
    pairs = [(f, s) for s in simplices for f in faces_of(s, proper=True)]
    poset = Poset.from_pairs(simplices, pairs)
    return RegularCWPoset(
        poset,
        dims={s: len(s) - 1 for s in simplices},
        payloads={s: s for s in simplices},
    )
