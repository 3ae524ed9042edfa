"""Matchings induced by closure and interior operators on a poset."""

from __future__ import annotations

from typing import TYPE_CHECKING

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.poset import MonotoneMap, Poset, order_complex
from simple_homotopy._deformations.common import MatchingConstructionError, log
from simple_homotopy._deformations.matching import (
    PartialMatching,
    check_acyclic,
    matching_to_collapses,
)
from simple_homotopy.utils import sort_labels

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from simple_homotopy._complexes.simplicial import Simplex
    from simple_homotopy._deformations.certificate import DeformationCertificate
    from simple_homotopy.utils import Label


def _check_map(Q: Poset, phi: MonotoneMap, direction: str) -> None:
    if phi.domain != Q:
        msg = "The map is not defined on the given poset."
        raise InputError(msg)
    ok = phi.is_ascending if direction == "ascending" else phi.is_descending
    if not ok:
        msg = f"Expected a {direction} map, got a {phi.kind} one."
        raise InputError(msg)
    if not phi.is_idempotent:
        msg = f"The {direction} map is not idempotent."
        raise InputError(msg)


def _pivot_matching(
    Q: Poset,
    phi: MonotoneMap,
    pick: Callable[[Iterable[Label]], Label],
) -> PartialMatching:
    K = order_complex(Q)
    pairs: dict[Simplex, Simplex] = {}
    for chain in K.sorted_simplices:
        moved = [x for x in chain if phi(x) != x]
        if not moved:
            continue
        y = phi(pick(moved))
        if y not in chain:
            pairs[chain] = sort_labels((*chain, y))
    matching = PartialMatching(K, pairs)
    report = check_acyclic(matching)
    if not report:
        msg = "Pivot matching has a cycle."
        raise MatchingConstructionError(msg, {"cycle": report.cycle})
    fixed = set(phi.fixed_points)
    inside = frozenset(c for c in K.simplices if fixed.issuperset(c))
    if matching.critical != inside:
        msg = "Critical cells of the pivot matching are not the chains of fixed points."
        diff = sort_labels(matching.critical ^ inside)[:5]
        raise MatchingConstructionError(msg, {"difference": diff})
    log.debug("pivot matching", n_pairs=len(matching), n_critical=len(inside))
    return matching


def closure_matching(Q: Poset, phi: MonotoneMap) -> PartialMatching:
    """Matching on ``F(Δ(Q))`` induced by a closure operator ``φ`` on ``Q``.

    For a chain with an element moved by ``φ``, let ``x`` be its largest
    such element; the chain is matched with the chain that has ``φ(x)``
    added or removed. Critical cells are the chains of fixed points.

    Raises
    ------
    InputError
        If ``φ`` is not ascending and idempotent.
    MatchingConstructionError
        If the resulting matching is cyclic.

    """
    _check_map(Q, phi, "ascending")
    position = {x: i for i, x in enumerate(Q.linear_extension)}
    return _pivot_matching(Q, phi, lambda xs: max(xs, key=position.__getitem__))


def interior_matching(Q: Poset, psi: MonotoneMap) -> PartialMatching:
    """Dual of `closure_matching` for a descending idempotent ``ψ``.

    The pivot is the smallest element of the chain moved by ``ψ``.
    """
    _check_map(Q, psi, "descending")
    position = {x: i for i, x in enumerate(Q.linear_extension)}
    return _pivot_matching(Q, psi, lambda xs: min(xs, key=position.__getitem__))


def closure_collapse(Q: Poset, phi: MonotoneMap) -> DeformationCertificate:
    """``Δ(Q) ↘ Δ(Fix φ)`` for a closure operator ``φ``."""
    matching = closure_matching(Q, phi)
    return matching_to_collapses(
        matching.complex,
        order_complex(Q.induced(phi.fixed_points)),
        matching,
    )


def interior_collapse(Q: Poset, psi: MonotoneMap) -> DeformationCertificate:
    """``Δ(Q) ↘ Δ(Fix ψ)`` for an interior operator ``ψ``."""
    matching = interior_matching(Q, psi)
    return matching_to_collapses(
        matching.complex,
        order_complex(Q.induced(psi.fixed_points)),
        matching,
    )
