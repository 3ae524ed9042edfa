"""Composite deformations between the complexes attached to graphs and lattices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import toolz

from simple_homotopy._complexes.common import check_cap
from simple_homotopy._complexes.crosscut import (
    atom_crosscut_complex,
    crosscut_stage_maps,
    crosscut_sublattice,
)
from simple_homotopy._complexes.graph import hom_k2_lattice, neighbor_closure, neighborhood_complex
from simple_homotopy._complexes.lattice import atomic_sublattice
from simple_homotopy._complexes.poset import MonotoneMap, face_poset, order_complex
from simple_homotopy._deformations.certificate import DeformationCertificate, concatenate
from simple_homotopy._deformations.common import MatchingConstructionError, PipelineError, log
from simple_homotopy._deformations.lattice_matching import restricted_jl_collapse
from simple_homotopy._deformations.retractions import closure_collapse, interior_collapse
from simple_homotopy._deformations.subdivision import bd_deformation
from simple_homotopy.utils import _resource_usage, sort_labels

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from simple_homotopy._complexes.crosscut import Crosscut
    from simple_homotopy._complexes.graph import Graph
    from simple_homotopy._complexes.lattice import BoundedLattice
    from simple_homotopy._complexes.simplicial import Simplex
    from simple_homotopy.utils import Label


def neighborhood_to_lovasz_collapse(G: Graph) -> DeformationCertificate:
    """``Bd N(G) ↘ Lo(G)`` through the closure operator ``A ↦ N(N(A))``."""
    Q = face_poset(neighborhood_complex(G)).poset
    phi = MonotoneMap.from_function(Q, lambda a: sort_labels(neighbor_closure(G, a)))
    return closure_collapse(Q, phi)


def _atom_closure_renamer(L: BoundedLattice) -> tuple[MonotoneMap, Callable[[Label], Label]]:
    """The closure ``σ ↦ {atoms ≤ ⋁σ}`` on ``F(Γ(L))`` and the renaming of its fixed points."""
    Q = face_poset(atom_crosscut_complex(L)).poset

    def close(sigma: Simplex) -> Simplex:
        top = L.join_set(sigma)
        return tuple(a for a in L.atoms if L.le(a, top))

    phi = MonotoneMap.from_function(Q, close)
    fixed = set(phi.fixed_points)

    def rename(sigma: Label) -> Label:
        return L.join_set(sigma) if sigma in fixed else sigma

    return phi, rename


def gamma_bd_collapse(L: BoundedLattice) -> DeformationCertificate:
    """``Bd Γ(L) ↘ Δ(bar L_a)``.

    Chains of faces closed under ``σ ↦ {atoms ≤ ⋁σ}`` survive; each such face
    is then renamed to its join, so the end is the order complex of the
    proper part of the atomic sublattice. For atomic ``L`` this is ``Δ(bar L)``.
    """
    phi, rename = _atom_closure_renamer(L)
    cert = closure_collapse(phi.domain, phi).relabel(rename)
    expected = order_complex(atomic_sublattice(L).proper_part())
    if cert.end != expected:
        msg = "Closed chains of Γ(L) do not match the atomic sublattice."
        raise MatchingConstructionError(msg, {"end": repr(cert.end), "expected": repr(expected)})
    return cert


def order_interior_collapse(L: BoundedLattice) -> DeformationCertificate:
    """``Δ(bar L) ↘ Δ(bar L_a)`` through ``x ↦ ⋁{atoms ≤ x}``."""
    bar = L.proper_part()
    psi = MonotoneMap.from_function(
        bar,
        lambda x: L.join_set(a for a in L.atoms if L.le(a, x)),
    )
    return interior_collapse(bar, psi)


def gamma_to_order_deformation(L: BoundedLattice) -> DeformationCertificate:
    """``Bd Γ(L) ↘ Δ(bar L_a) ↗ Δ(bar L)``; only collapses when ``L`` is atomic."""
    return gamma_bd_collapse(L).then(order_interior_collapse(L).reverse())


def crosscut_deformation(L: BoundedLattice, crosscut: Crosscut) -> DeformationCertificate:
    """``Δ(bar L) ↘ Δ(bar L_C)`` in two stages.

    Elements below the crosscut are lifted first, then elements above it
    are lowered; each stage is an idempotent map with its own matching.
    """
    ascending, descending = crosscut_stage_maps(L, crosscut)
    first = closure_collapse(ascending.domain, ascending)
    second = interior_collapse(descending.domain, descending)
    cert = first.then(second)
    expected = order_complex(crosscut_sublattice(L, crosscut).proper_part())
    if cert.end != expected:
        msg = "Two-stage crosscut collapse did not end at the crosscut sublattice."
        raise MatchingConstructionError(msg, {"end": repr(cert.end), "expected": repr(expected)})
    return cert


order_to_crosscut_collapse = crosscut_deformation


@dataclass(frozen=True)
class Stage:
    """One named piece of a composite deformation."""

    index: int
    name: str
    certificate: DeformationCertificate
    morse: bool = False

    @property
    def is_degenerate(self) -> bool:
        """Whether a matching stage pairs no cells at all."""
        return self.morse and not self.certificate.steps


def _check_junction(before: Stage, after: Stage) -> None:
    if before.certificate.end != after.certificate.start:
        msg = (
            f"Stage {after.index} ({after.name}) starts in {after.certificate.start}"
            f" but stage {before.index} ends in {before.certificate.end}."
        )
        raise PipelineError(msg, stage=after.index, name=after.name)


def concatenate_stages(stages: Sequence[Stage]) -> DeformationCertificate:
    """Glue stage certificates; raises `PipelineError` at the first mismatched junction."""
    for before, after in toolz.sliding_window(2, stages):
        _check_junction(before, after)
    return concatenate(s.certificate for s in stages)


def hom_to_neighborhood_stages(
    G: Graph,
    *,
    cap: int = 8,
    unsafe: bool = False,
) -> list[Stage]:
    """The six stages of ``Bd Hom(K₂, G) ⇝ N(G)``.

    1. ``Δ(bar P) ↘ Δ(bar P_a)`` where ``P`` is the face lattice of the Hom complex;
    2. ``Δ(bar P_a) ↗ Bd Γ(P)``;
    3. ``Bd Γ(P) ⇝ Γ(P)``, with atoms ``(A, B)`` renamed to ``A``;
    4. ``Γ(P) ↘ Lo(G)``;
    5. ``Lo(G) ↗ Bd N(G)``;
    6. ``Bd N(G) ⇝ N(G)``.

    Raises
    ------
    PipelineError
        If two consecutive stages do not meet in the same complex.

    """
    check_cap("graph vertices", len(G.vertices), cap, unsafe=unsafe)
    P = hom_k2_lattice(G)
    atoms = set(P.atoms)
    _, rename = _atom_closure_renamer(P)

    def rename_subdivision(v: Label) -> Label:
        return v[0] if v in atoms else rename(v)

    builders: list[tuple[str, bool, Callable[[], DeformationCertificate]]] = [
        ("hom to atomic part", True, lambda: order_interior_collapse(P)),
        ("atomic part to Bd gamma", True, lambda: gamma_bd_collapse(P).reverse()),
        (
            "Bd gamma to gamma",
            False,
            lambda: bd_deformation(atom_crosscut_complex(P)).relabel(rename_subdivision).reverse(),
        ),
        ("gamma to lovasz", True, lambda: restricted_jl_collapse(G)),
        ("lovasz to Bd N", True, lambda: neighborhood_to_lovasz_collapse(G).reverse()),
        ("Bd N to N", False, lambda: bd_deformation(neighborhood_complex(G)).reverse()),
    ]
    stages: list[Stage] = []
    for index, (name, morse, build) in enumerate(builders, start=1):
        stage = Stage(index, name, build(), morse)
        log.info(
            "built stage",
            stage=index,
            name=name,
            n_collapses=stage.certificate.n_collapses,
            n_expansions=stage.certificate.n_expansions,
            **_resource_usage(),
        )
        if stages:
            _check_junction(stages[-1], stage)
        stages.append(stage)
    return stages


def hom_to_neighborhood_deformation(
    G: Graph,
    *,
    cap: int = 8,
    unsafe: bool = False,
) -> DeformationCertificate:
    """A formal deformation from ``Bd Hom(K₂, G)`` to ``N(G)``."""
    return concatenate_stages(hom_to_neighborhood_stages(G, cap=cap, unsafe=unsafe))
