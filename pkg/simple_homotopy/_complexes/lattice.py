"""Bounded lattices with precomputed meet and join tables."""

from __future__ import annotations

import functools
import itertools
from typing import TYPE_CHECKING

import numpy as np

from simple_homotopy._complexes.common import InputError, SizeCapError, check_cap, log
from simple_homotopy._complexes.poset import Poset, from_relation
from simple_homotopy.utils import Label, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator


class NotALatticeError(ValueError):
    """The poset is not a bounded lattice.

    ``pair`` holds the two elements without a unique meet or join, or is
    ``None`` when a bound is missing.
    """

    def __init__(self, msg: str, pair: tuple[Label, Label] | None = None) -> None:
        super().__init__(msg)
        self.pair = pair


def _bound_table(le: np.ndarray, lt: np.ndarray) -> tuple[np.ndarray, tuple[int, int] | None]:
    """Least upper bounds of all pairs, or the first pair that has none."""
    n = len(le)
    table = np.full((n, n), -1, dtype=int)
    for i in range(n):
        table[i, i] = i
        for j in range(i + 1, n):
            if le[i, j]:
                k = j
            elif le[j, i]:
                k = i
            else:
                candidates = np.flatnonzero(le[i] & le[j])
                minimal = candidates[~lt[np.ix_(candidates, candidates)].any(axis=0)]
                if len(minimal) != 1:
                    return table, (i, j)
                k = int(minimal[0])
            table[i, j] = table[j, i] = k
    return table, None


class BoundedLattice:
    """A finite lattice with its meet and join tables.

    Parameters
    ----------
    poset
        The underlying poset. Construction fails with `NotALatticeError`
        if a bound is missing or some pair lacks a unique meet or join.

    """

    def __init__(self, poset: Poset) -> None:
        self.poset = poset
        n = len(poset)
        le = poset._lt | np.eye(n, dtype=bool)
        bottoms = np.flatnonzero(le.all(axis=1))
        tops = np.flatnonzero(le.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            msg = "A bounded lattice needs a unique minimum and a unique maximum."
            raise NotALatticeError(msg)
        self.bottom: Label = poset.elements[int(bottoms[0])]
        self.top: Label = poset.elements[int(tops[0])]
        self._join, pair = _bound_table(le, poset._lt)
        if pair is not None:
            x, y = (poset.elements[i] for i in pair)
            msg = f"{x!r} and {y!r} have no unique least upper bound."
            raise NotALatticeError(msg, (x, y))
        self._meet, pair = _bound_table(le.T, poset._lt.T)
        if pair is not None:
            x, y = (poset.elements[i] for i in pair)
            msg = f"{x!r} and {y!r} have no unique greatest lower bound."
            raise NotALatticeError(msg, (x, y))

    def __repr__(self) -> str:
        return f"BoundedLattice(n_elements={len(self)})"

    def __len__(self) -> int:
        return len(self.poset)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.poset)

    def __contains__(self, x: object) -> bool:
        return x in self.poset

    @property
    def elements(self) -> tuple[Label, ...]:
        return self.poset.elements

    def le(self, x: Label, y: Label) -> bool:
        return self.poset.le(x, y)

    def lt(self, x: Label, y: Label) -> bool:
        return self.poset.lt(x, y)

    def meet(self, x: Label, y: Label) -> Label:
        return self.poset.elements[self._meet[self.poset.index(x), self.poset.index(y)]]

    def join(self, x: Label, y: Label) -> Label:
        return self.poset.elements[self._join[self.poset.index(x), self.poset.index(y)]]

    def meet_set(self, elements: Iterable[Label]) -> Label:
        """``⋀S``; the meet of the empty set is the top."""
        return functools.reduce(self.meet, elements, self.top)

    def join_set(self, elements: Iterable[Label]) -> Label:
        """``⋁S``; the join of the empty set is the bottom."""
        return functools.reduce(self.join, elements, self.bottom)

    @functools.cached_property
    def atoms(self) -> tuple[Label, ...]:
        return tuple(x for x in self.elements if self.poset.down_set(x) == {self.bottom})

    @functools.cached_property
    def coatoms(self) -> tuple[Label, ...]:
        return tuple(x for x in self.elements if self.poset.up_set(x) == {self.top})

    @functools.cached_property
    def is_atomic(self) -> bool:
        """Whether every element is a join of atoms."""
        return all(
            self.join_set(a for a in self.atoms if self.le(a, x)) == x for x in self.elements
        )

    @property
    def linear_extension(self) -> tuple[Label, ...]:
        return self.poset.linear_extension

    def proper_part(self) -> Poset:
        """``bar L``, the lattice without its bounds."""
        return self.poset.induced(x for x in self.elements if x not in (self.bottom, self.top))


def as_lattice(P: Poset) -> BoundedLattice:
    """Verify that ``P`` is a bounded lattice and build its tables.

    Raises
    ------
    NotALatticeError
        With the offending pair as ``pair``.

    """
    return BoundedLattice(P)


def proper_part(L: BoundedLattice) -> Poset:
    """``bar L := L ∖ {0̂, 1̂}`` with the induced order."""
    return L.proper_part()


def atoms(L: BoundedLattice) -> tuple[Label, ...]:
    return L.atoms


def meet_set(L: BoundedLattice, elements: Iterable[Label]) -> Label:
    return L.meet_set(elements)


def join_set(L: BoundedLattice, elements: Iterable[Label]) -> Label:
    return L.join_set(elements)


def sublattice(L: BoundedLattice, elements: Iterable[Label]) -> BoundedLattice:
    """The induced subposet on ``elements`` plus both bounds, as a lattice."""
    keep = {*elements, L.bottom, L.top}
    return BoundedLattice(L.poset.induced(keep))


def atomic_sublattice(L: BoundedLattice) -> BoundedLattice:
    """``L_a``: the bottom, all joins of atoms, and the top."""
    closed = set(L.atoms)
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            z = L.join(x, y)
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    return sublattice(L, closed)


def boolean_lattice(n: int) -> BoundedLattice:
    """``B_n``: subsets of ``{1, ..., n}`` (as sorted tuples) under inclusion."""
    subsets = [c for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    return BoundedLattice(from_relation(subsets, lambda x, y: set(x) < set(y), check=False))


def chain_lattice(n: int) -> BoundedLattice:
    """The chain ``0 < 1 < ... < n-1``."""
    if n < 1:
        msg = "A chain lattice needs at least one element."
        raise InputError(msg)
    return BoundedLattice(from_relation(range(n), lambda x, y: x < y, check=False))


def closure_system_lattice(
    family: Iterable[Iterable[int]],
    ground: Iterable[int],
) -> BoundedLattice:
    """Lattice of the intersection-closed family generated by ``family`` and ``ground``.

    Elements are sorted tuples; meets are intersections and joins are the
    smallest member containing the union.
    """
    members = {frozenset(ground)}
    members.update(frozenset(s) for s in family)
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        for b in list(members):
            c = a & b
            if c not in members:
                members.add(c)
                frontier.append(c)
    elements = [sort_labels(m) for m in members]
    return BoundedLattice(from_relation(elements, lambda x, y: set(x) < set(y), check=False))


def random_closure_lattice(
    rng: np.random.Generator | int | None,
    *,
    n_points: int = 4,
    n_generators: int = 3,
    max_elements: int = 12,
    max_tries: int = 100,
) -> BoundedLattice:
    """A random closure-system lattice on at most 10 points.

    Generators are uniformly random subsets of ``{1, ..., n_points}``;
    draws whose lattice exceeds ``max_elements`` are rejected.
    """
    check_cap("points", n_points, 10)
    rng = np.random.default_rng(rng)
    ground = range(1, n_points + 1)
    for _ in range(max_tries):
        generators = [
            [int(p) for p in np.flatnonzero(rng.random(n_points) < 0.5) + 1]  # noqa: PLR2004
            for _ in range(n_generators)
        ]
        lattice = closure_system_lattice(generators, ground)
        if len(lattice) <= max_elements:
            return lattice
    msg = f"No closure lattice with at most {max_elements} elements in {max_tries} draws."
    raise SizeCapError(msg)


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [(first,), *partition]
        for k, block in enumerate(partition):
            yield [*partition[:k], (first, *block), *partition[k + 1 :]]


def partition_lattice(n: int, *, cap: int = 7, unsafe: bool = False) -> BoundedLattice:
    """``Π_n``: set partitions of ``{1, ..., n}`` ordered by refinement.

    A partition is labelled by the sorted tuple of its sorted blocks, e.g.
    ``((1, 2), (3,))``.
    """
    if n < 1:
        msg = "partition_lattice needs n >= 1."
        raise InputError(msg)
    check_cap("partition lattice n", n, cap, unsafe=unsafe)
    partitions = [sort_labels(p) for p in _set_partitions(tuple(range(1, n + 1)))]
    block_of = {p: {e: k for k, block in enumerate(p) for e in block} for p in partitions}

    def refines(x: tuple, y: tuple) -> bool:
        ids = block_of[y]
        return len(x) > len(y) and all(len({ids[e] for e in block}) == 1 for block in x)

    lattice = BoundedLattice(from_relation(partitions, refines, check=False))
    log.debug("built partition lattice", n=n, n_elements=len(lattice))
    return lattice
