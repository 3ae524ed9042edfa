"""Readers and writers for graph, complex, lattice and certificate files.

Text formats hold one record per line; blank lines and lines starting with
``#`` are skipped. Files ending in ``.json`` are read as JSON.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.graph import Graph
from simple_homotopy._complexes.lattice import BoundedLattice, as_lattice
from simple_homotopy._complexes.poset import from_covers
from simple_homotopy._complexes.simplicial import SimplicialComplex
from simple_homotopy._deformations.certificate import (
    DeformationCertificate,
    certificate_lines,
    parse_certificate,
)
from simple_homotopy.utils import (
    Label,
    atomic_write,
    decode_label,
    encode_label,
    format_label,
    label_key,
    parse_token,
)

if TYPE_CHECKING:
    from collections.abc import Iterator


def _records(path: Path) -> Iterator[tuple[int, list[str]]]:
    with path.open() as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                yield lineno, stripped.split()


def _load_json(path: Path) -> Any:
    try:
        with path.open() as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        msg = f"{path}:{e.lineno}: invalid JSON ({e.msg})."
        raise InputError(msg) from e


def _decode(obj: Any, path: Path) -> Label:
    try:
        return decode_label(obj)
    except ValueError as e:
        msg = f"{path}: {e}"
        raise InputError(msg) from e


def read_graph(path: Path) -> Graph:
    """A graph from ``u v`` edge lines or JSON ``{"vertices": [...], "edges": [[u, v], ...]}``."""
    path = Path(path)
    if path.suffix == ".json":
        data = _load_json(path)
        if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
            msg = f"{path}: expected an object with an 'edges' list."
            raise InputError(msg)
        edges = []
        for k, edge in enumerate(data["edges"]):
            if not isinstance(edge, list) or len(edge) != 2:  # noqa: PLR2004
                msg = f"{path}: edge {k} is not a pair."
                raise InputError(msg)
            edges.append((_decode(edge[0], path), _decode(edge[1], path)))
        vertices = [_decode(v, path) for v in data.get("vertices") or []]
        return Graph.from_edges(edges, vertices)
    edges = []
    for lineno, tokens in _records(path):
        if len(tokens) != 2:  # noqa: PLR2004
            msg = f"{path}:{lineno}: expected two vertices per edge, got {len(tokens)}."
            raise InputError(msg)
        edges.append((parse_token(tokens[0]), parse_token(tokens[1])))
    return Graph.from_edges(edges)


def write_graph(G: Graph, path: Path) -> None:
    edges = sorted(G.edges, key=lambda e: (label_key(e[0]), label_key(e[1])))
    data = {
        "vertices": [encode_label(v) for v in G.vertices],
        "edges": [[encode_label(u), encode_label(v)] for u, v in edges],
    }
    with atomic_write(path) as f:
        json.dump(data, f, indent=1)


def read_complex(path: Path) -> SimplicialComplex:
    """A complex from one facet per line or JSON ``{"facets": [[...], ...]}``."""
    path = Path(path)
    if path.suffix == ".json":
        data = _load_json(path)
        if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
            msg = f"{path}: expected an object with a 'facets' list."
            raise InputError(msg)
        facets = []
        for k, facet in enumerate(data["facets"]):
            if not isinstance(facet, list) or not facet:
                msg = f"{path}: facet {k} is not a nonempty list."
                raise InputError(msg)
            facets.append([_decode(v, path) for v in facet])
        return SimplicialComplex.from_facets(facets)
    facets = [[parse_token(t) for t in tokens] for _, tokens in _records(path)]
    return SimplicialComplex.from_facets(facets)


def complex_to_json(K: SimplicialComplex) -> dict[str, Any]:
    return {
        "facets": [encode_label(f) for f in K.facets],
        "f_vector": list(K.f_vector()),
        "euler": K.euler_characteristic(),
    }


def write_complex(K: SimplicialComplex, path: Path) -> None:
    with atomic_write(path) as f:
        json.dump(complex_to_json(K), f)
        f.write("\n")


def read_lattice(path: Path) -> BoundedLattice:
    """A lattice from JSON ``{"elements": [...], "covers": [[lower, upper], ...]}``."""
    path = Path(path)
    data = _load_json(path)
    if not isinstance(data, dict) or not all(
        isinstance(data.get(key), list) for key in ("elements", "covers")
    ):
        msg = f"{path}: expected an object with 'elements' and 'covers'."
        raise InputError(msg)
    elements = [_decode(x, path) for x in data["elements"]]
    covers = []
    for k, pair in enumerate(data["covers"]):
        if not isinstance(pair, list) or len(pair) != 2:  # noqa: PLR2004
            msg = f"{path}: cover {k} is not a pair."
            raise InputError(msg)
        covers.append((_decode(pair[0], path), _decode(pair[1], path)))
    return as_lattice(from_covers(elements, covers))


def _element_name(x: Label) -> str | int:
    return x if isinstance(x, (str, int)) else format_label(x)


def lattice_to_json(L: BoundedLattice) -> dict[str, Any]:
    """Elements are written by name; tuple labels become ``{a,b}`` strings."""
    return {
        "elements": [_element_name(x) for x in L.elements],
        "covers": [[_element_name(x), _element_name(y)] for x, y in L.poset.covers],
    }


def write_lattice(L: BoundedLattice, path: Path) -> None:
    with atomic_write(path) as f:
        json.dump(lattice_to_json(L), f)
        f.write("\n")


def read_crosscut(path: Path) -> list[Label]:
    """Crosscut members from a JSON list or ``{"members": [...]}``."""
    path = Path(path)
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("members")
    if not isinstance(data, list):
        msg = f"{path}: expected a list of crosscut members."
        raise InputError(msg)
    return [_decode(x, path) for x in data]


def read_certificate(path: Path) -> DeformationCertificate:
    path = Path(path)
    with path.open() as f:
        try:
            return parse_certificate(f)
        except InputError as e:
            msg = f"{path}: {e}"
            raise InputError(msg) from e


def write_certificate(cert: DeformationCertificate, path: Path) -> None:
    with atomic_write(path) as f:
        for line in certificate_lines(cert):
            f.write(line + "\n")


def write_json(data: Any, path: Path) -> None:
    with atomic_write(path) as f:
        json.dump(data, f, indent=1)
        f.write("\n")
