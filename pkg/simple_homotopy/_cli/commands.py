"""Subcommand handlers; each returns the process exit code."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

from rich.markup import escape
from rich.table import Table

from simple_homotopy._cli.common import log
from simple_homotopy._cli.io import (
    complex_to_json,
    read_certificate,
    read_complex,
    read_crosscut,
    read_graph,
    read_lattice,
    write_certificate,
    write_complex,
    write_json,
    write_lattice,
)
from simple_homotopy._cli.probe import probe_conjecture, probe_summary, search_witness
from simple_homotopy._complexes.common import InputError, check_cap
from simple_homotopy._complexes.crosscut import (
    atom_crosscut_complex,
    atoms_crosscut,
    bounded_below_complex,
    make_crosscut,
)
from simple_homotopy._complexes.graph import (
    disconnected_graphs_complex,
    hom_k2,
    lovasz_complex,
    neighborhood_complex,
)
from simple_homotopy._complexes.lattice import partition_lattice
from simple_homotopy._complexes.poset import order_complex
from simple_homotopy._deformations.certificate import verify_certificate
from simple_homotopy._deformations.lattice_matching import jl_to_order_collapse
from simple_homotopy._deformations.pipeline import (
    concatenate_stages,
    crosscut_deformation,
    gamma_to_order_deformation,
    hom_to_neighborhood_stages,
    neighborhood_to_lovasz_collapse,
)
from simple_homotopy._deformations.subdivision import bd_deformation, stellar_deformation
from simple_homotopy.homology import homology, homology_equal
from simple_homotopy.utils import console

if TYPE_CHECKING:
    from simple_homotopy._cli.config import CommandConfig
    from simple_homotopy._complexes.graph import Graph
    from simple_homotopy._complexes.lattice import BoundedLattice
    from simple_homotopy._complexes.simplicial import SimplicialComplex
    from simple_homotopy._deformations.certificate import DeformationCertificate
    from simple_homotopy._deformations.pipeline import Stage

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1

BUILD_KINDS = ("neighborhood", "lovasz", "homk2", "gamma", "jl", "dgn", "partition")
DEFORM_PIPELINES = (
    "hom2n",
    "bdnbhd2lovasz",
    "jl2order",
    "bdgamma2order",
    "order2crosscut",
    "x2bd",
    "x2stellar",
)


def _require_output(config: CommandConfig) -> None:
    if config.output is None:
        msg = f"{config.subcommand} needs --output."
        raise InputError(msg)


def _size(config: CommandConfig) -> int:
    if config.n is None:
        msg = f"build {config.kind} needs a size argument."
        raise InputError(msg)
    return config.n


def _lattice(config: CommandConfig) -> BoundedLattice:
    L = read_lattice(config.input)
    check_cap("lattice elements", len(L), config.cap("lattice_elements"), unsafe=config.unsafe_size)
    return L


def _graph_input(config: CommandConfig) -> Graph:
    G = read_graph(config.input)
    check_cap("graph vertices", len(G.vertices), config.cap("graph_vertices"), unsafe=config.unsafe_size)
    return G


def _complex_table(title: str, rows: dict[str, SimplicialComplex]) -> Table:
    table = Table(title=title)
    table.add_column("complex")
    table.add_column("f-vector")
    table.add_column("χ", justify="right")
    for name, K in rows.items():
        table.add_row(name, str(K.f_vector()), str(K.euler_characteristic()))
    return table


def cmd_build(config: CommandConfig) -> int:
    """Build a complex (or the partition lattice) and write it as JSON."""
    _require_output(config)
    kind = config.kind
    assert config.output is not None
    if kind == "partition":
        n = _size(config)
        L = partition_lattice(n, cap=config.cap("partition_n"), unsafe=config.unsafe_size)
        write_lattice(L, config.output)
        console.print(f"Π_{n}: {len(L)} elements")
        return EXIT_OK
    if kind == "dgn":
        n = _size(config)
        check_cap("partition n", n, config.cap("partition_n"), unsafe=config.unsafe_size)
        K = disconnected_graphs_complex(n)
    elif kind == "neighborhood":
        K = neighborhood_complex(_graph_input(config))
    elif kind == "lovasz":
        K = lovasz_complex(_graph_input(config)).complex
    elif kind == "homk2":
        hom = hom_k2(_graph_input(config))
        console.print(f"Hom(K₂, G) cells: f-vector {hom.f_vector()}, χ {hom.euler_characteristic()}")
        K = order_complex(hom.poset)
    elif kind == "gamma":
        K = atom_crosscut_complex(_lattice(config))
    elif kind == "jl":
        K = bounded_below_complex(_lattice(config))
    else:
        msg = f"Unknown build kind {kind!r}, expected one of {', '.join(BUILD_KINDS)}."
        raise InputError(msg)
    write_complex(K, config.output)
    console.print(_complex_table(f"build {kind}", {kind: K}))
    log.info("built complex", kind=kind, f_vector=K.f_vector(), output=str(config.output))
    return EXIT_OK


def check_certificate(cert: DeformationCertificate) -> int:
    """Replay ``cert`` and compare the homology of its endpoints.

    Prints the failing step and reason when the replay is rejected.
    """
    report = verify_certificate(cert)
    if not report:
        console.print(
            f"[red]rejected[/red] at step {report.index}: {escape(report.reason)}",
            soft_wrap=True,
        )
        return EXIT_VERIFICATION_FAILED
    if not homology_equal(cert.start, cert.end):
        console.print("[red]rejected[/red]: endpoints have different homology")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _stage_table(stages: list[Stage]) -> Table:
    table = Table(title="hom2n stages")
    for column in ("#", "stage", "collapses", "expansions", "matching"):
        table.add_column(column)
    for s in stages:
        kind = "degenerate" if s.is_degenerate else ("Morse" if s.morse else "subdivision")
        table.add_row(
            str(s.index),
            s.name,
            str(s.certificate.n_collapses),
            str(s.certificate.n_expansions),
            kind,
        )
    return table


def _deformation(config: CommandConfig) -> DeformationCertificate:
    kind = config.kind
    if kind == "hom2n":
        stages = hom_to_neighborhood_stages(
            _graph_input(config),
            cap=config.cap("graph_vertices"),
            unsafe=config.unsafe_size,
        )
        console.print(_stage_table(stages))
        return concatenate_stages(stages)
    if kind == "bdnbhd2lovasz":
        return neighborhood_to_lovasz_collapse(_graph_input(config))
    if kind == "jl2order":
        return jl_to_order_collapse(_lattice(config))
    if kind == "bdgamma2order":
        return gamma_to_order_deformation(_lattice(config))
    if kind == "order2crosscut":
        L = _lattice(config)
        if config.crosscut is None:
            crosscut = atoms_crosscut(L)
        else:
            crosscut = make_crosscut(L, read_crosscut(config.crosscut))
        return crosscut_deformation(L, crosscut)
    if kind == "x2bd":
        return bd_deformation(read_complex(config.input), with_progress_bar=config.with_progress_bar)
    if kind == "x2stellar":
        if config.simplex is None:
            msg = "deform x2stellar needs --simplex."
            raise InputError(msg)
        return stellar_deformation(read_complex(config.input), config.simplex)
    msg = f"Unknown pipeline {kind!r}, expected one of {', '.join(DEFORM_PIPELINES)}."
    raise InputError(msg)


def cmd_deform(config: CommandConfig) -> int:
    """Run a deformation pipeline, write its certificate and verify it."""
    _require_output(config)
    assert config.output is not None
    cert = _deformation(config)
    write_certificate(cert, config.output)
    console.print(
        f"{config.kind}: {cert.n_collapses} collapses, {cert.n_expansions} expansions, "
        f"{cert.start.f_vector()} -> {cert.end.f_vector()}",
    )
    log.info("wrote certificate", pipeline=config.kind, n_steps=len(cert), output=str(config.output))
    return check_certificate(cert)


def cmd_verify(config: CommandConfig) -> int:
    """Verify a certificate file; exit status 0 only if it replays and homology agrees."""
    cert = read_certificate(config.input)
    code = check_certificate(cert)
    if code == EXIT_OK:
        console.print(f"verified: {len(cert)} steps")
    return code


def cmd_homology(config: CommandConfig) -> int:
    """Integer homology of a complex file."""
    K = read_complex(config.input)
    summary = homology(K)
    table = Table(title="homology")
    table.add_column("dim", justify="right")
    table.add_column("betti", justify="right")
    table.add_column("torsion")
    for d, row in enumerate(summary.dims):
        table.add_row(str(d), str(row["betti"]), str(row["torsion"]))
    console.print(table)
    if config.output is not None:
        write_json({"complex": complex_to_json(K), **summary.to_json()}, config.output)
    return EXIT_OK


def cmd_probe_conjecture(config: CommandConfig) -> int:
    """Compare crosscut and order complexes over seeded random lattices."""
    lattice = _lattice(config) if config.inputs else None
    crosscut = read_crosscut(config.crosscut) if config.crosscut is not None else None
    if crosscut is not None and lattice is None:
        msg = "--crosscut needs an --input lattice."
        raise InputError(msg)
    report = probe_conjecture(
        trials=config.trials,
        seed=config.seed,
        lattice=lattice,
        crosscut=crosscut,
        max_elements=config.cap("lattice_elements"),
        with_progress_bar=config.with_progress_bar,
    )
    summary = probe_summary(report)
    console.print(summary)
    if config.output is not None:
        records = json.loads(report.to_json(orient="records"))
        write_json({"trials": records, "summary": summary}, config.output)
    return EXIT_OK


def cmd_search_witness(config: CommandConfig) -> int:
    """Search small connected graphs for one with four nondegenerate Morse stages."""
    witness = search_witness(config.cap("graph_vertices"), with_progress_bar=config.with_progress_bar)
    if witness is None:
        console.print("no witness found")
    else:
        console.print(witness)
    if config.output is not None:
        write_json({"witness": witness}, config.output)
    return EXIT_OK
