"""Formal deformations: sequences of elementary collapses and expansions."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Literal

import toolz

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.simplicial import (
    Simplex,
    SimplicialComplex,
    _as_renamer,
    facets_of,
)
from simple_homotopy._deformations.common import log
from simple_homotopy.utils import Label, decode_label, encode_label, sort_labels

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping

StepKind = Literal["collapse", "expand"]


@dataclass(frozen=True)
class DeformationStep:
    """One elementary move on the pair ``(free_face, coface)``."""

    kind: StepKind
    free_face: Simplex
    coface: Simplex

    @property
    def is_cover(self) -> bool:
        """Whether ``coface`` is ``free_face`` plus exactly one vertex."""
        return len(self.coface) == len(self.free_face) + 1 and set(self.free_face) < set(
            self.coface,
        )

    def flipped(self) -> DeformationStep:
        """The inverse move."""
        kind: StepKind = "expand" if self.kind == "collapse" else "collapse"
        return DeformationStep(kind, self.free_face, self.coface)


@dataclass(frozen=True, repr=False)
class DeformationCertificate:
    """A formal deformation from ``start`` to ``end``.

    Replaying ``steps`` on ``start`` must yield ``end``; `verify_certificate`
    checks this without trusting the producer.
    """

    start: SimplicialComplex
    steps: tuple[DeformationStep, ...]
    end: SimplicialComplex

    @classmethod
    def identity(cls, K: SimplicialComplex) -> DeformationCertificate:
        """The empty deformation of ``K``."""
        return cls(K, (), K)

    def __repr__(self) -> str:
        return (
            f"DeformationCertificate(n_collapses={self.n_collapses}, "
            f"n_expansions={self.n_expansions}, start={self.start}, end={self.end})"
        )

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def n_collapses(self) -> int:
        return sum(1 for s in self.steps if s.kind == "collapse")

    @property
    def n_expansions(self) -> int:
        return len(self.steps) - self.n_collapses

    def reverse(self) -> DeformationCertificate:
        """The inverse deformation: steps reversed with their kinds flipped."""
        return DeformationCertificate(
            self.end,
            tuple(s.flipped() for s in reversed(self.steps)),
            self.start,
        )

    def then(self, other: DeformationCertificate) -> DeformationCertificate:
        """Concatenate with a certificate that starts where this one ends."""
        return concatenate([self, other])

    def vertices(self) -> tuple[Label, ...]:
        """Every vertex label that appears anywhere in the certificate."""
        labels = set(self.start.vertices) | set(self.end.vertices)
        for step in self.steps:
            labels.update(step.coface)
        return sort_labels(labels)

    def relabel(
        self,
        mapping: Mapping[Label, Label] | Callable[[Label], Label],
    ) -> DeformationCertificate:
        """Rename vertices throughout; the map must be injective on all labels used."""
        rename = _as_renamer(mapping, self.vertices())

        def move(simplex: Simplex) -> Simplex:
            return sort_labels(rename(v) for v in simplex)

        return DeformationCertificate(
            self.start.relabel(rename),
            tuple(DeformationStep(s.kind, move(s.free_face), move(s.coface)) for s in self.steps),
            self.end.relabel(rename),
        )


def concatenate(certificates: Iterable[DeformationCertificate]) -> DeformationCertificate:
    """Join certificates end to start; raises `InputError` at the first mismatch."""
    certificates = list(certificates)
    if not certificates:
        msg = "Nothing to concatenate."
        raise InputError(msg)
    for k, (a, b) in enumerate(toolz.sliding_window(2, certificates)):
        if a.end != b.start:
            msg = f"Certificate {k} ends in {a.end} but certificate {k + 1} starts in {b.start}."
            raise InputError(msg)
    return DeformationCertificate(
        certificates[0].start,
        tuple(toolz.concat(c.steps for c in certificates)),
        certificates[-1].end,
    )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of replaying a certificate; truthy iff it is valid."""

    ok: bool
    n_steps: int
    index: int | None = None
    reason: str = ""
    witness: tuple[Simplex, ...] = ()
    euler_characteristic: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _present_cofaces(current: set[Simplex], simplex: Simplex) -> tuple[Simplex, ...]:
    inside = set(simplex)
    return sort_labels(s for s in current if len(s) == len(simplex) + 1 and inside < set(s))


def verify_certificate(cert: DeformationCertificate) -> VerificationReport:
    """Replay ``cert`` from its start and check every step and the end complex.

    A collapse needs both cells present, the coface maximal and the free face
    covered by nothing else. An expansion needs both cells absent and all
    other faces of the coface present.
    """
    current = set(cert.start.simplices)
    n_cofaces: Counter[Simplex] = Counter(f for s in current for f in facets_of(s))
    euler = cert.start.euler_characteristic()
    n = len(cert.steps)

    def fail(i: int, reason: str, witness: Iterable[Simplex] = ()) -> VerificationReport:
        log.info("certificate rejected", index=i, reason=reason)
        return VerificationReport(False, n, i, reason, tuple(witness), euler)

    for i, step in enumerate(cert.steps):
        tau, sigma = step.free_face, step.coface
        if not step.is_cover or sort_labels(sigma) != sigma or sort_labels(tau) != tau:
            return fail(i, "coface does not cover the free face", (tau, sigma))
        if step.kind == "collapse":
            if tau not in current or sigma not in current:
                return fail(i, "collapse of a cell that is not present", (tau, sigma))
            if n_cofaces[sigma]:
                return fail(i, "coface is not maximal", _present_cofaces(current, sigma))
            if n_cofaces[tau] != 1:
                return fail(
                    i,
                    f"free face has {n_cofaces[tau]} cofaces",
                    _present_cofaces(current, tau),
                )
            for cell in (sigma, tau):
                current.remove(cell)
                n_cofaces.subtract(facets_of(cell))
        elif step.kind == "expand":
            if tau in current or sigma in current:
                return fail(i, "expansion adds a cell that is already present", (tau, sigma))
            missing = [f for f in (*facets_of(tau), *facets_of(sigma)) if f != tau and f not in current]
            if missing:
                return fail(i, "expansion is missing faces", missing)
            for cell in (tau, sigma):
                current.add(cell)
                n_cofaces.update(facets_of(cell))
        else:
            return fail(i, f"unknown step kind {step.kind!r}", (tau, sigma))
    if current != set(cert.end.simplices):
        extra = sort_labels(current - cert.end.simplices)
        absent = sort_labels(cert.end.simplices - current)
        return fail(n, "end complex mismatch", (*extra[:5], *absent[:5]))
    if cert.end.euler_characteristic() != euler:
        return fail(n, "Euler characteristic changed")
    return VerificationReport(True, n, euler_characteristic=euler)


def _facets_json(K: SimplicialComplex) -> list[Any]:
    return [encode_label(f) for f in K.facets]


def certificate_lines(cert: DeformationCertificate) -> Iterator[str]:
    """The JSON-lines rendering: a header record, then one record per step."""
    header = {"start_facets": _facets_json(cert.start), "end_facets": _facets_json(cert.end)}
    yield json.dumps(header)
    for step in cert.steps:
        record = {
            "op": step.kind,
            "free": encode_label(step.free_face),
            "coface": encode_label(step.coface),
        }
        yield json.dumps(record)


def _decode_simplex(obj: Any, lineno: int) -> Simplex:
    if not isinstance(obj, list) or not obj:
        msg = f"Line {lineno}: expected a nonempty list of vertices, got {obj!r}."
        raise InputError(msg)
    try:
        return tuple(decode_label(v) for v in obj)
    except ValueError as e:
        msg = f"Line {lineno}: {e}"
        raise InputError(msg) from e


def parse_certificate(lines: Iterable[str]) -> DeformationCertificate:
    """Inverse of `certificate_lines`; raises `InputError` with the line number."""
    header: dict[str, Any] | None = None
    header_lineno = 1
    steps: list[DeformationStep] = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            msg = f"Line {lineno}: invalid JSON ({e.msg})."
            raise InputError(msg) from e
        if not isinstance(record, dict):
            msg = f"Line {lineno}: expected a JSON object, got {record!r}."
            raise InputError(msg)
        if header is None:
            if not {"start_facets", "end_facets"} <= set(record):
                msg = f"Line {lineno}: the first record must hold start_facets and end_facets."
                raise InputError(msg)
            header = record
            header_lineno = lineno
            continue
        if record.get("op") not in ("collapse", "expand"):
            msg = f"Line {lineno}: unknown op {record.get('op')!r}."
            raise InputError(msg)
        steps.append(
            DeformationStep(
                record["op"],
                _decode_simplex(record.get("free"), lineno),
                _decode_simplex(record.get("coface"), lineno),
            ),
        )
    if header is None:
        msg = "Empty certificate file."
        raise InputError(msg)
    facets: dict[str, list[Simplex]] = {}
    for key in ("start_facets", "end_facets"):
        if not isinstance(header[key], list):
            msg = f"Line {header_lineno}: {key} must be a list of facets."
            raise InputError(msg)
        facets[key] = [_decode_simplex(f, header_lineno) for f in header[key]]
    start = SimplicialComplex.from_facets(facets["start_facets"])
    end = SimplicialComplex.from_facets(facets["end_facets"])
    return DeformationCertificate(start, tuple(steps), end)
