"""Integral simplicial homology and an exhaustive collapse search.

Both serve as independent checks on the certificates produced by
`simple_homotopy.deformations`.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import structlog
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from simple_homotopy._complexes.common import EmptyComplexError, InputError, check_cap
from simple_homotopy._complexes.simplicial import SimplicialComplex, facets_of
from simple_homotopy._deformations.certificate import DeformationCertificate, DeformationStep
from simple_homotopy.utils import simplex_key

if TYPE_CHECKING:
    from collections.abc import Sequence

    from simple_homotopy._complexes.simplicial import Simplex

logger = logging.getLogger("simple_homotopy.homology")
logger.setLevel(logging.INFO)
log = structlog.wrap_logger(logger)

__all__ = [
    "HomologySummary",
    "boundary_matrix",
    "brute_force_collapse_search",
    "homology",
    "homology_equal",
    "smith_normal_form",
]

Columns = dict[int, dict[int, int]]


def _boundary_columns(K: SimplicialComplex, d: int) -> tuple[int, int, Columns]:
    rows = {s: i for i, s in enumerate(K.faces_of_dim(d - 1))}
    cols = K.faces_of_dim(d)
    columns: Columns = {
        j: {rows[f]: (-1) ** i for i, f in enumerate(facets_of(s))} for j, s in enumerate(cols)
    }
    return len(rows), len(cols), columns


def boundary_matrix(K: SimplicialComplex, d: int) -> DomainMatrix:
    """The boundary map ``C_d → C_{d-1}`` over ``ZZ``.

    Rows and columns follow the canonical order of the simplices; removing
    the ``i``-th vertex of a face contributes the sign ``(-1)^i``.
    """
    if not 1 <= d <= K.dim:
        msg = f"Boundary degree {d} is outside 1..{K.dim}."
        raise InputError(msg)
    n_rows, n_cols, columns = _boundary_columns(K, d)
    rows = [[ZZ(0)] * n_cols for _ in range(n_rows)]
    for j, column in columns.items():
        for i, value in column.items():
            rows[i][j] = ZZ(value)
    return DomainMatrix(rows, (n_rows, n_cols), ZZ)


def _eliminate_unit_pivots(columns: Columns) -> int:
    """Pivot on ``±1`` entries in place and return the number of pivots.

    Each pivot contributes an invariant factor 1; the remaining columns,
    with pivot rows dropped, are unimodularly equivalent to the residue.
    """
    in_row: dict[int, set[int]] = defaultdict(set)
    for j, column in columns.items():
        for i in column:
            in_row[i].add(j)
    n_pivots = 0
    for j in sorted(columns):
        column = columns[j]
        pivot = next((i for i in sorted(column) if abs(column[i]) == 1), None)
        if pivot is None:
            continue
        sign = column[pivot]
        for k in sorted(in_row[pivot] - {j}):
            other = columns[k]
            factor = other[pivot] * sign
            for i, value in column.items():
                new = other.get(i, 0) - factor * value
                if new:
                    other[i] = new
                    in_row[i].add(k)
                else:
                    other.pop(i, None)
                    in_row[i].discard(k)
        for i in column:
            in_row[i].discard(j)
        del columns[j]
        n_pivots += 1
    return n_pivots


def _columns_of(M: DomainMatrix | Sequence[Sequence[int]]) -> Columns:
    entries = M.to_Matrix().tolist() if isinstance(M, DomainMatrix) else M
    columns: Columns = defaultdict(dict)
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            if value:
                columns[j][i] = int(value)
    return dict(columns)


def _factors(columns: Columns) -> tuple[tuple[int, ...], int]:
    n_pivots = _eliminate_unit_pivots(columns)
    rest = {j: c for j, c in columns.items() if c}
    factors: list[int] = []
    if rest:
        row_ids = sorted({i for c in rest.values() for i in c})
        row_pos = {i: k for k, i in enumerate(row_ids)}
        col_ids = sorted(rest)
        dense = [[ZZ(0)] * len(col_ids) for _ in row_ids]
        for c, j in enumerate(col_ids):
            for i, value in rest[j].items():
                dense[row_pos[i]][c] = ZZ(value)
        residue = DomainMatrix(dense, (len(row_ids), len(col_ids)), ZZ)
        factors = [abs(int(f)) for f in invariant_factors(residue) if f != 0]
    return (1,) * n_pivots + tuple(factors), n_pivots + len(factors)


def smith_normal_form(
    M: DomainMatrix | Sequence[Sequence[int]],
) -> tuple[tuple[int, ...], int]:
    """Nonzero invariant factors ``d₁ | d₂ | ...`` of an integer matrix and its rank.

    Arithmetic is exact. Unit entries are eliminated first on a sparse copy
    and the remaining block goes through `sympy`'s Smith normal form.
    """
    return _factors(_columns_of(M))


@dataclass(frozen=True)
class HomologySummary:
    """Unreduced integral homology: Betti numbers and torsion per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.betti))

    @property
    def dims(self) -> list[dict[str, Any]]:
        return [
            {"betti": b, "torsion": list(t)} for b, t in zip(self.betti, self.torsion, strict=True)
        ]

    def to_json(self) -> dict[str, Any]:
        return {"dims": self.dims, "euler": self.euler_characteristic}

    def padded(self, n_dims: int) -> HomologySummary:
        """The same groups, listed up to dimension ``n_dims - 1``."""
        extra = max(n_dims - len(self.betti), 0)
        return HomologySummary((*self.betti, *(0,) * extra), (*self.torsion, *((),) * extra))


def homology(K: SimplicialComplex) -> HomologySummary:
    """``H_*(K; ZZ)`` from the Smith normal forms of the boundary maps.

    Raises
    ------
    EmptyComplexError
        If ``K`` is empty.

    """
    if K.is_empty:
        msg = "Homology of the empty complex is not defined here."
        raise EmptyComplexError(msg)
    f = K.f_vector()
    ranks = [0] * (K.dim + 2)
    torsion: list[tuple[int, ...]] = [()] * (K.dim + 1)
    for d in range(1, K.dim + 1):
        factors, ranks[d] = _factors(_boundary_columns(K, d)[2])
        torsion[d - 1] = tuple(x for x in factors if x > 1)
    betti = tuple(f[d] - ranks[d] - ranks[d + 1] for d in range(K.dim + 1))
    summary = HomologySummary(betti, tuple(torsion))
    if summary.euler_characteristic != K.euler_characteristic():
        msg = f"Betti numbers {betti} do not sum to the Euler characteristic."
        raise RuntimeError(msg)
    log.debug("computed homology", f_vector=f, betti=betti)
    return summary


def homology_equal(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    """Whether two complexes have the same integral homology in every dimension."""
    h1, h2 = homology(K1), homology(K2)
    n_dims = max(len(h1.betti), len(h2.betti))
    return h1.padded(n_dims) == h2.padded(n_dims)


def _free_pairs(current: frozenset[Simplex], keep: frozenset[Simplex]) -> list[tuple]:
    n_cofaces: dict[Simplex, int] = defaultdict(int)
    coface_of: dict[Simplex, Simplex] = {}
    for s in current:
        for f in facets_of(s):
            n_cofaces[f] += 1
            coface_of[f] = s
    pairs = [
        (tau, coface_of[tau])
        for tau, n in n_cofaces.items()
        if n == 1 and tau not in keep and not n_cofaces.get(coface_of[tau])
    ]
    return sorted(pairs, key=lambda p: (-len(p[1]), simplex_key(p[1]), simplex_key(p[0])))


def brute_force_collapse_search(
    K: SimplicialComplex,
    K_sub: SimplicialComplex,
    *,
    cap: int = 18,
    unsafe: bool = False,
) -> DeformationCertificate | None:
    """Search all collapse sequences ``K ↘ K_sub``.

    Returns the first certificate found in a deterministic depth-first
    order, or ``None`` if no sequence exists.

    Raises
    ------
    SizeCapError
        If ``K`` has more than ``cap`` faces and ``unsafe`` is false.

    """
    check_cap("complex faces", len(K), cap, unsafe=unsafe)
    if not K_sub.is_subcomplex(K):
        msg = f"{K_sub} is not a subcomplex of {K}."
        raise InputError(msg)
    target = K_sub.simplices
    dead: set[frozenset[Simplex]] = set()
    path: list[DeformationStep] = []

    def search(current: frozenset[Simplex]) -> bool:
        if current == target:
            return True
        if current in dead:
            return False
        for tau, sigma in _free_pairs(current, target):
            path.append(DeformationStep("collapse", tau, sigma))
            if search(current - {tau, sigma}):
                return True
            path.pop()
        dead.add(current)
        return False

    found = search(K.simplices)
    log.debug("collapse search", found=found, n_dead_states=len(dead))
    return DeformationCertificate(K, tuple(path), K_sub) if found else None
