"""The acyclic matching on ``J(L)`` and its restriction to ``Γ(P)`` for graphs."""

from __future__ import annotations

from typing import TYPE_CHECKING

from simple_homotopy._complexes.crosscut import bounded_below_complex
from simple_homotopy._complexes.graph import gamma_p_description, image_lattice, lovasz_complex
from simple_homotopy._complexes.poset import order_complex
from simple_homotopy._deformations.common import (
    MatchingConstructionError,
    TheoremContradictionError,
    log,
)
from simple_homotopy._deformations.matching import (
    PartialMatching,
    check_acyclic,
    matching_to_collapses,
)
from simple_homotopy.utils import sort_labels

if TYPE_CHECKING:
    from simple_homotopy._complexes.graph import Graph
    from simple_homotopy._complexes.lattice import BoundedLattice
    from simple_homotopy._complexes.simplicial import Simplex, SimplicialComplex
    from simple_homotopy._deformations.certificate import DeformationCertificate
    from simple_homotopy.utils import Label


def jl_pivot(L: BoundedLattice, simplex: Simplex) -> Label | None:
    """The element ``a(S)`` for a simplex ``S`` of ``J(L)``; ``None`` for a chain.

    ``S`` is listed along the linear extension of ``L`` as ``a₁, ..., a_t``.
    ``k`` counts the leading elements that lie below every later element,
    and ``a(S)`` is the meet of ``a_{k+1}, ..., a_t``.
    """
    position = {x: i for i, x in enumerate(L.linear_extension)}
    ordered = sorted(simplex, key=position.__getitem__)
    k = 0
    while k < len(ordered) and all(L.lt(ordered[k], y) for y in ordered[k + 1 :]):
        k += 1
    if k >= len(ordered) - 1:
        return None
    return L.meet_set(ordered[k:])


def jl_matching(L: BoundedLattice, within: SimplicialComplex | None = None) -> PartialMatching:
    """The matching ``S ↦ S ∪ {a(S)}`` on the faces of ``J(L)``.

    Parameters
    ----------
    L
        A bounded lattice with a nonempty proper part.
    within
        A subcomplex of ``J(L)`` to restrict to. The matching must then be
        closed on it, otherwise `TheoremContradictionError` is raised.

    Returns
    -------
    PartialMatching
        Acyclic, with the chains of ``bar L`` (in ``within``) as critical cells.

    """
    K = bounded_below_complex(L) if within is None else within
    pairs: dict[Simplex, Simplex] = {}
    for simplex in K.sorted_simplices:
        a = jl_pivot(L, simplex)
        if a is None or a in simplex:
            continue
        upper = sort_labels((*simplex, a))
        if upper not in K:
            msg = f"Matching leaves the complex at {simplex}."
            raise TheoremContradictionError(msg, witness=simplex)
        if jl_pivot(L, upper) != a:
            msg = f"The pivot of {simplex} changes after adding {a!r}."
            raise MatchingConstructionError(msg, {"simplex": simplex, "pivot": a})
        pairs[simplex] = upper
    matching = PartialMatching(K, pairs)
    bar = L.proper_part()
    chains = frozenset(s for s in K.simplices if bar.is_chain(s))
    if matching.critical != chains:
        diff = sort_labels(matching.critical ^ chains)[:5]
        msg = "Critical cells of the J(L) matching are not exactly the chains."
        raise MatchingConstructionError(msg, {"difference": diff})
    report = check_acyclic(matching)
    if not report:
        msg = "The J(L) matching has a cycle."
        raise MatchingConstructionError(msg, {"cycle": report.cycle})
    log.debug("jl matching", n_pairs=len(matching), n_critical=len(chains))
    return matching


def jl_to_order_collapse(L: BoundedLattice) -> DeformationCertificate:
    """``J(L) ↘ Δ(bar L)``."""
    matching = jl_matching(L)
    return matching_to_collapses(matching.complex, order_complex(L.proper_part()), matching)


def restricted_jl_matching(G: Graph) -> PartialMatching:
    """The ``J(L)`` matching of the image lattice of ``G`` restricted to ``Γ(P)``.

    ``Γ(P)`` is taken from `gamma_p_description` with each vertex ``(A, B)``
    renamed to ``A``, an element of ``Im N``. Critical cells are the faces
    of ``Lo(G)``.
    """
    L = image_lattice(G)
    gamma = gamma_p_description(G).relabel(lambda v: v[0])
    matching = jl_matching(L, within=gamma)
    lovasz = lovasz_complex(G).complex
    if matching.critical != lovasz.simplices:
        diff = sort_labels(matching.critical ^ lovasz.simplices)[:5]
        msg = "Critical cells of the restricted matching are not the faces of Lo(G)."
        raise MatchingConstructionError(msg, {"difference": diff})
    return matching


def restricted_jl_collapse(G: Graph) -> DeformationCertificate:
    """``Γ(P) ↘ Lo(G)``."""
    matching = restricted_jl_matching(G)
    return matching_to_collapses(matching.complex, lovasz_complex(G).complex, matching)
