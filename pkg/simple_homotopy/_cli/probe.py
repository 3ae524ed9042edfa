"""Exploratory runs: crosscut complexes against order complexes, and witness search."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

import networkx as nx
import numpy as np
import pandas as pd

from simple_homotopy._cli.common import log
from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.crosscut import (
    crosscut_complex,
    crosscut_sublattice,
    make_crosscut,
    random_crosscut,
)
from simple_homotopy._complexes.graph import Graph
from simple_homotopy._complexes.lattice import NotALatticeError, random_closure_lattice
from simple_homotopy._complexes.poset import order_complex
from simple_homotopy._deformations.pipeline import hom_to_neighborhood_stages
from simple_homotopy.homology import homology
from simple_homotopy.utils import _progress, format_label

if TYPE_CHECKING:
    from simple_homotopy._complexes.lattice import BoundedLattice
    from simple_homotopy.utils import Label


def _homology_record(L: BoundedLattice, members: tuple[Label, ...]) -> dict[str, Any]:
    crosscut = make_crosscut(L, members, unsafe=True)
    h_gamma = homology(crosscut_complex(L, crosscut))
    h_sub = homology(order_complex(crosscut_sublattice(L, crosscut).proper_part()))
    h_full = homology(order_complex(L.proper_part()))
    n = max(len(h.betti) for h in (h_gamma, h_sub, h_full))
    h_gamma, h_sub, h_full = (h.padded(n) for h in (h_gamma, h_sub, h_full))
    return {
        "n_elements": len(L),
        "crosscut": [format_label(c) for c in members],
        "betti_crosscut_complex": list(h_gamma.betti),
        "betti_crosscut_sublattice": list(h_sub.betti),
        "betti_lattice": list(h_full.betti),
        "matches_sublattice": h_gamma == h_sub,
        "matches_lattice": h_gamma == h_full,
    }


def probe_conjecture(
    *,
    trials: int = 50,
    seed: int = 0,
    lattice: BoundedLattice | None = None,
    crosscut: list[Label] | None = None,
    max_elements: int = 12,
    with_progress_bar: bool = False,
) -> pd.DataFrame:
    """Compare the homology of ``Γ(C, L)`` with ``Δ(bar L_C)`` and ``Δ(bar L)``.

    Each trial draws a random closure-system lattice (unless ``lattice`` is
    given) and a random crosscut (unless ``crosscut`` is given). Findings are
    recorded, never asserted; trials without a crosscut are marked skipped.
    """
    rng = np.random.default_rng(seed)
    records = []
    n_trials = 1 if lattice is not None and crosscut is not None else trials
    for trial in _progress(range(n_trials), with_progress_bar, desc="probing"):
        L = lattice if lattice is not None else random_closure_lattice(rng, max_elements=max_elements)
        try:
            members = tuple(crosscut) if crosscut is not None else random_crosscut(L, rng).members
            record = {"trial": trial, "skipped": False, **_homology_record(L, members)}
        except InputError as e:
            record = {"trial": trial, "skipped": True, "n_elements": len(L), "reason": str(e)}
        if not record["skipped"] and not record["matches_sublattice"]:
            log.warning("homology mismatch", **record)
        records.append(record)
    return pd.DataFrame.from_records(records)


def probe_summary(report: pd.DataFrame) -> dict[str, int]:
    done = report[~report["skipped"]]
    return {
        "n_trials": len(report),
        "n_skipped": int(report["skipped"].sum()),
        "n_match_sublattice": int(done["matches_sublattice"].sum()) if len(done) else 0,
        "n_match_lattice": int(done["matches_lattice"].sum()) if len(done) else 0,
    }


def search_witness(
    max_vertices: int = 6,
    *,
    with_progress_bar: bool = False,
) -> dict[str, Any] | None:
    """First connected graph in the graph atlas whose four matching stages all pair cells.

    Graphs are tried in atlas order (by number of vertices, then edges);
    returns the edge list and per-stage step counts, or ``None``.
    """
    candidates = [
        g
        for g in nx.graph_atlas_g()
        if 0 < g.number_of_nodes() <= max_vertices
        and g.number_of_edges() > 0
        and nx.is_connected(g)
    ]
    for g in _progress(candidates, with_progress_bar, desc="searching"):
        G = Graph.from_networkx(g)
        try:
            stages = hom_to_neighborhood_stages(G, unsafe=True)
        except NotALatticeError:
            continue
        if any(s.is_degenerate for s in stages):
            continue
        witness = {
            "edges": sorted([int(u), int(v)] for u, v in G.edges),
            "n_vertices": len(G.vertices),
            "stages": {s.name: len(s.certificate) for s in stages},
        }
        log.info("found witness", **witness)
        return witness
    return None
