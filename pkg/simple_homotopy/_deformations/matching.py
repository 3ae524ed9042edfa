"""Partial matchings on face posets and their collapse schedules."""

from __future__ import annotations

import functools
import heapq
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import networkx as nx

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.simplicial import Simplex, SimplicialComplex, facets_of
from simple_homotopy._deformations.certificate import DeformationCertificate, DeformationStep
from simple_homotopy._deformations.common import (
    MalformedMatchingError,
    MatchingConstructionError,
    log,
)
from simple_homotopy.utils import simplex_key, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping


@dataclass(frozen=True, eq=False)
class PartialMatching:
    """A partial matching ``μ: Σ → F(K) ∖ Σ`` on the face poset of ``K``.

    ``pairs`` maps each lower cell ``x ∈ Σ`` to ``μ(x)``, which must cover
    ``x``. Validated on construction; raises `MalformedMatchingError`.
    """

    complex: SimplicialComplex
    pairs: Mapping[Simplex, Simplex] = field(repr=False)
    _lower_of: dict[Simplex, Simplex] = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        uppers: dict[Simplex, Simplex] = {}
        for lower, upper in self.pairs.items():
            if lower not in self.complex or upper not in self.complex:
                msg = f"Matched pair ({lower}, {upper}) is not in the complex."
                raise MalformedMatchingError(msg)
            if len(upper) != len(lower) + 1 or not set(lower) < set(upper):
                msg = f"{upper} does not cover {lower}."
                raise MalformedMatchingError(msg)
            if upper in uppers:
                msg = f"{uppers[upper]} and {lower} are both matched with {upper}."
                raise MalformedMatchingError(msg)
            uppers[upper] = lower
        overlap = set(self.pairs) & set(uppers)
        if overlap:
            msg = f"Cells {sort_labels(overlap)[:3]} are matched both up and down."
            raise MalformedMatchingError(msg)
        object.__setattr__(self, "_lower_of", uppers)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[Simplex, Simplex]]:
        for lower in sorted(self.pairs, key=simplex_key):
            yield lower, self.pairs[lower]

    def mu(self, x: Simplex) -> Simplex:
        return self.pairs[x]

    def lower_of(self, y: Simplex) -> Simplex:
        """``μ⁻¹(y)`` for a matched upper cell."""
        return self._lower_of[y]

    @functools.cached_property
    def lowers(self) -> frozenset[Simplex]:
        return frozenset(self.pairs)

    @functools.cached_property
    def uppers(self) -> frozenset[Simplex]:
        return frozenset(self._lower_of)

    @functools.cached_property
    def critical(self) -> frozenset[Simplex]:
        """Unmatched cells."""
        return self.complex.simplices - self.lowers - self.uppers


@dataclass(frozen=True)
class AcyclicityReport:
    """Outcome of `check_acyclic`; truthy iff the matching is acyclic."""

    acyclic: bool
    cycle: tuple[Simplex, ...] = ()
    critical: frozenset[Simplex] = frozenset()

    def __bool__(self) -> bool:
        return self.acyclic


def check_acyclic(matching: PartialMatching) -> AcyclicityReport:
    """Look for a cycle ``μ(x₁) ≻ x₂, μ(x₂) ≻ x₃, ..., μ(x_t) ≻ x₁``.

    The search runs on the graph of lower cells with an edge ``x → f`` for
    every other lower cell ``f`` that is a facet of ``μ(x)``.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(matching.lowers)
    for x, y in matching:
        graph.add_edges_from((x, f) for f in facets_of(y) if f != x and f in matching.pairs)
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return AcyclicityReport(True, critical=matching.critical)
    cycle = tuple(u for u, _ in edges)
    log.warning("cyclic matching", length=len(cycle))
    return AcyclicityReport(False, cycle=cycle, critical=matching.critical)


def matching_to_collapses(
    K: SimplicialComplex,
    K_sub: SimplicialComplex,
    matching: PartialMatching,
) -> DeformationCertificate:
    """Turn an acyclic matching into a collapse sequence ``K ↘ K_sub``.

    Pairs are emitted greedily, largest coface first and lexicographically
    among equal dimensions, whenever the coface is maximal and the lower
    cell has no other coface left.

    Parameters
    ----------
    K
        The complex the matching lives on.
    K_sub
        A subcomplex whose faces are exactly the critical cells.
    matching
        An acyclic partial matching on ``F(K)``.

    Returns
    -------
    DeformationCertificate
        Collapses only, from ``K`` to ``K_sub``.

    Raises
    ------
    InputError
        If ``K_sub`` is not a subcomplex or the critical cells differ from it.
    MatchingConstructionError
        If no pair can be emitted while matched cells remain.

    """
    if matching.complex != K:
        msg = "The matching does not live on the given complex."
        raise InputError(msg)
    if not K_sub.is_subcomplex(K):
        msg = f"{K_sub} is not a subcomplex of {K}."
        raise InputError(msg)
    if matching.critical != K_sub.simplices:
        extra = sort_labels(matching.critical ^ K_sub.simplices)[:5]
        msg = f"Critical cells differ from the subcomplex, e.g. at {extra}."
        raise InputError(msg)

    present = set(matching.lowers | matching.uppers)
    # Every coface of a matched cell is matched, so counting cofaces among
    # matched cells gives the number of cofaces in the current complex.
    n_cofaces: Counter = Counter(f for s in present for f in facets_of(s))
    heap: list[tuple] = []

    def push(tau: Simplex) -> None:
        sigma = matching.mu(tau)
        heapq.heappush(heap, (-len(sigma), simplex_key(sigma), simplex_key(tau), tau, sigma))

    for tau in matching.lowers:
        push(tau)
    steps: list[DeformationStep] = []
    while heap:
        *_, tau, sigma = heapq.heappop(heap)
        if tau not in present or n_cofaces[sigma] or n_cofaces[tau] != 1:
            continue
        steps.append(DeformationStep("collapse", tau, sigma))
        present.difference_update((tau, sigma))
        for f in itertools.chain(facets_of(sigma), facets_of(tau)):
            n_cofaces[f] -= 1
            if f not in present:
                continue
            if f in matching.pairs:
                push(f)
            elif f in matching.uppers:
                push(matching.lower_of(f))
    if present:
        report = check_acyclic(matching)
        state = {
            "n_steps": len(steps),
            "n_remaining": len(present),
            "remaining": sort_labels(present)[:10],
            "acyclic": report.acyclic,
            "cycle": report.cycle,
        }
        msg = f"Collapse schedule is stuck with {len(present)} matched cells left."
        raise MatchingConstructionError(msg, state)
    log.debug("scheduled collapses", n_steps=len(steps), n_critical=len(K_sub))
    return DeformationCertificate(K, tuple(steps), K_sub)
