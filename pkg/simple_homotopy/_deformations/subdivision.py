"""Formal deformations from a complex to its stellar and barycentric subdivisions."""

from __future__ import annotations

from typing import TYPE_CHECKING

from simple_homotopy._complexes.simplicial import (
    SimplicialComplex,
    _require_simplex,
    barycentric_subdivision,
    faces_of,
    stellar_subdivision,
)
from simple_homotopy._deformations.certificate import DeformationCertificate, concatenate
from simple_homotopy._deformations.common import MatchingConstructionError, log
from simple_homotopy._deformations.matching import PartialMatching, matching_to_collapses
from simple_homotopy.utils import _progress, simplex_key, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable

    from simple_homotopy._complexes.simplicial import Simplex
    from simple_homotopy.utils import Label


def _cone_over_star(
    K: SimplicialComplex,
    sigma: Simplex,
    apex: Label,
) -> tuple[SimplicialComplex, frozenset[Simplex]]:
    """``K ∪ apex * st(σ)`` and the closed star of ``σ``."""
    cofaces = K.cofaces(sigma)
    star = frozenset(f for c in cofaces for f in faces_of(c))
    coned = {(apex,)} | {sort_labels((*tau, apex)) for tau in star}
    return SimplicialComplex(K.simplices | coned), star


def stellar_deformation(
    K: SimplicialComplex,
    simplex: Iterable[Label],
    apex: Label | None = None,
) -> DeformationCertificate:
    """A formal deformation ``K ⇝ sd(K, σ)``.

    First the cone ``v * st(σ)`` is attached by expansions, then every
    coface ``τ`` of ``σ`` is collapsed away through the pair ``(τ, τ ∪ {v})``.

    Parameters
    ----------
    K
        The complex.
    simplex
        The simplex ``σ``; must lie in ``K``.
    apex
        Label of the new vertex ``v``, as in `stellar_subdivision`.

    Returns
    -------
    DeformationCertificate
        Expansions followed by collapses, ending at ``stellar_subdivision(K, σ, apex)``.

    """
    sigma = _require_simplex(K, simplex)
    v = sigma if apex is None else apex
    target = stellar_subdivision(K, sigma, apex=v)
    coned, star = _cone_over_star(K, sigma, v)
    # The cone collapses onto st(σ) by toggling the first vertex of σ.
    w = sigma[0]
    cone_pairs = {
        sort_labels((*tau, v)): sort_labels((*tau, v, w))
        for tau in ((), *star)
        if w not in tau
    }
    attach = matching_to_collapses(coned, K, PartialMatching(coned, cone_pairs)).reverse()

    pairs = {tau: sort_labels((*tau, v)) for tau in K.cofaces(sigma)}
    detach = matching_to_collapses(coned, target, PartialMatching(coned, pairs))
    return attach.then(detach)


def bd_deformation(
    K: SimplicialComplex,
    *,
    with_progress_bar: bool = False,
) -> DeformationCertificate:
    """A formal deformation ``K ⇝ Bd K`` by stellar subdivisions.

    Faces are subdivided by decreasing dimension, lexicographically within a
    dimension, each at a new vertex labelled by the face itself; the end is
    ``barycentric_subdivision(K)``.
    """
    faces = sorted(K.simplices, key=lambda s: (-len(s), simplex_key(s)))
    current = K
    certificates = [DeformationCertificate.identity(K)]
    for face in _progress(faces, with_progress_bar, desc="stellar subdivisions"):
        cert = stellar_deformation(current, face)
        certificates.append(cert)
        current = cert.end
    expected = barycentric_subdivision(K)
    if current != expected:
        msg = "Stellar subdivisions did not end at the barycentric subdivision."
        raise MatchingConstructionError(msg, {"end": repr(current), "expected": repr(expected)})
    cert = concatenate(certificates)
    log.debug("bd deformation", n_faces=len(faces), n_steps=len(cert))
    return cert
