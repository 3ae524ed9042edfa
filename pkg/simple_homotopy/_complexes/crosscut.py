"""Crosscuts, crosscut complexes, the bounded-below complex and crosscut maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from simple_homotopy._complexes.common import EmptyComplexError, InputError, check_cap, log
from simple_homotopy._complexes.lattice import BoundedLattice, sublattice
from simple_homotopy._complexes.poset import MonotoneMap
from simple_homotopy._complexes.simplicial import Simplex, SimplicialComplex
from simple_homotopy.utils import Label, sort_labels

if TYPE_CHECKING:
    from collections.abc import Iterable

    import numpy as np


@dataclass(frozen=True)
class CrosscutReport:
    """Outcome of `is_crosscut`; truthy iff the set is a crosscut."""

    valid: bool
    outside_proper_part: tuple[Label, ...] = ()
    comparable_pairs: tuple[tuple[Label, Label], ...] = ()
    unsaturated_chains: tuple[tuple[Label, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True, eq=False)
class Crosscut:
    """A validated crosscut ``C ⊆ bar L``."""

    lattice: BoundedLattice
    members: tuple[Label, ...]


def is_crosscut(
    L: BoundedLattice,
    members: Iterable[Label],
    *,
    cap: int = 20,
    unsafe: bool = False,
) -> CrosscutReport:
    """Check that ``members`` is an antichain in ``bar L`` meeting every maximal chain.

    Saturation is checked by enumerating maximal chains, so the lattice
    size is capped (``cap``, lifted by ``unsafe=True``).
    """
    check_cap("lattice for saturation check", len(L), cap, unsafe=unsafe)
    members = sort_labels(set(members))
    outside = tuple(x for x in members if x not in L or x in (L.bottom, L.top))
    if outside:
        return CrosscutReport(valid=False, outside_proper_part=outside)
    comparable = tuple(
        (x, y)
        for k, x in enumerate(members)
        for y in members[k + 1 :]
        if L.le(x, y) or L.le(y, x)
    )
    inside = set(members)
    unsaturated = tuple(c for c in L.poset.maximal_chains() if inside.isdisjoint(c))
    valid = bool(members) and not comparable and not unsaturated
    return CrosscutReport(
        valid=valid,
        comparable_pairs=comparable,
        unsaturated_chains=unsaturated,
    )


def make_crosscut(L: BoundedLattice, members: Iterable[Label], **kwargs: int | bool) -> Crosscut:
    """Validate ``members`` and wrap them as a `Crosscut`; raises `InputError` otherwise."""
    members = sort_labels(set(members))
    report = is_crosscut(L, members, **kwargs)  # type: ignore[arg-type]
    if not report:
        msg = f"{list(members)} is not a crosscut: {report}"
        raise InputError(msg)
    return Crosscut(L, members)


def atoms_crosscut(L: BoundedLattice) -> Crosscut:
    return Crosscut(L, L.atoms)


def coatoms_crosscut(L: BoundedLattice) -> Crosscut:
    return Crosscut(L, L.coatoms)


def random_crosscut(L: BoundedLattice, rng: np.random.Generator) -> Crosscut:
    """A uniformly chosen crosscut among all antichains of ``bar L`` that are crosscuts."""
    bar = L.proper_part()
    order = bar.linear_extension
    antichains: list[tuple[Label, ...]] = []

    def extend(chosen: tuple[Label, ...], start: int) -> None:
        for i in range(start, len(order)):
            x = order[i]
            if all(not bar.comparable(x, y) for y in chosen):
                new = (*chosen, x)
                antichains.append(new)
                extend(new, i + 1)

    extend((), 0)
    crosscuts = [a for a in antichains if is_crosscut(L, a, unsafe=True)]
    if not crosscuts:
        msg = "The lattice has an empty proper part, so it has no crosscut."
        raise InputError(msg)
    return Crosscut(L, sort_labels(crosscuts[int(rng.integers(len(crosscuts)))]))


def atom_crosscut_complex(L: BoundedLattice) -> SimplicialComplex:
    """``Γ(L)``: sets of atoms whose join is not the top."""
    if not L.atoms or L.atoms == (L.top,):
        msg = "The lattice has no atoms below its top."
        raise EmptyComplexError(msg)
    return SimplicialComplex.from_predicate(L.atoms, lambda s: L.join_set(s) != L.top)


def crosscut_complex(L: BoundedLattice, crosscut: Crosscut | Iterable[Label]) -> SimplicialComplex:
    """``Γ(C, L)``: subsets of ``C`` whose join is not the top or whose meet is not the bottom."""
    if not isinstance(crosscut, Crosscut):
        crosscut = make_crosscut(L, crosscut)

    def is_simplex(s: Simplex) -> bool:
        return L.join_set(s) != L.top or L.meet_set(s) != L.bottom

    return SimplicialComplex.from_predicate(crosscut.members, is_simplex)


def bounded_below_complex(L: BoundedLattice) -> SimplicialComplex:
    """``J(L)``: subsets of ``bar L`` with a meet other than the bottom."""
    bar = L.proper_part()
    return SimplicialComplex.from_predicate(bar.elements, lambda s: L.meet_set(s) != L.bottom)


def _closure(L: BoundedLattice, seeds: Iterable[Label], op: str) -> set[Label]:
    combine = L.join if op == "join" else L.meet
    closed = set(seeds)
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            z = combine(x, y)
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    return closed


def crosscut_sublattice(L: BoundedLattice, crosscut: Crosscut) -> BoundedLattice:
    """``L_C``: bounds plus all joins and all meets of nonempty subsets of ``C``."""
    members = crosscut.members
    elements = _closure(L, members, "join") | _closure(L, members, "meet")
    return sublattice(L, elements)


def _comparability(L: BoundedLattice, crosscut: Crosscut) -> tuple[set[Label], set[Label]]:
    """Elements of ``bar L`` below some member and above some member."""
    below: set[Label] = set()
    above: set[Label] = set()
    for c in crosscut.members:
        below.update(x for x in L.poset.down_set(c) if x != L.bottom)
        above.update(x for x in L.poset.up_set(c) if x != L.top)
    members = set(crosscut.members)
    return below | members, above | members


def crosscut_map(L: BoundedLattice, crosscut: Crosscut) -> MonotoneMap:
    """The retraction of ``L`` onto ``L_C``.

    Elements above the crosscut go to ``⋁C_{≤x}``, elements below it to
    ``⋀C_{≥x}``; members and both bounds are fixed.
    """
    below, above = _comparability(L, crosscut)
    members = crosscut.members
    values: dict[Label, Label] = {}
    for x in L.elements:
        if x in (L.bottom, L.top):
            values[x] = x
        elif x in above:
            values[x] = L.join_set(c for c in members if L.le(c, x))
        elif x in below:
            values[x] = L.meet_set(c for c in members if L.le(x, c))
        else:
            msg = f"{x!r} is not comparable with any crosscut member; the crosscut is not saturated."
            raise InputError(msg)
    phi = MonotoneMap(L.poset, values)
    if not phi.is_idempotent:
        msg = "Crosscut map is not idempotent."
        raise InputError(msg)
    return phi


def crosscut_stage_maps(L: BoundedLattice, crosscut: Crosscut) -> tuple[MonotoneMap, MonotoneMap]:
    """Split the crosscut map into an ascending and a descending idempotent stage.

    The first map is defined on ``bar L`` and lifts elements below the
    crosscut to ``⋀C_{≥x}``. The second is defined on the proper part of
    its fixed points and lowers elements above the crosscut to ``⋁C_{≤x}``.
    Their composite has image ``bar L_C``.
    """
    below, above = _comparability(L, crosscut)
    members = crosscut.members
    bar = L.proper_part()
    ascending = MonotoneMap.from_function(
        bar,
        lambda x: L.meet_set(c for c in members if L.le(x, c)) if x in below else x,
    )
    fixed = bar.induced(ascending.fixed_points)
    descending = MonotoneMap.from_function(
        fixed,
        lambda x: L.join_set(c for c in members if L.le(c, x)) if x in above else x,
    )
    log.debug(
        "split crosscut map",
        n_lifted=len(bar) - len(fixed),
        n_lowered=len(fixed) - len(descending.fixed_points),
    )
    return ascending, descending
