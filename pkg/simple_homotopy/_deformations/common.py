from __future__ import annotations

import logging
from typing import Any

import structlog

logger = logging.getLogger("simple_homotopy.deformations")
logger.setLevel(logging.INFO)
log = structlog.wrap_logger(logger)


class MalformedMatchingError(ValueError):
    """A matched pair is not a cover pair, or the pairs overlap."""


class MatchingConstructionError(RuntimeError):
    """A matching or collapse schedule built by this package is inconsistent.

    This signals a bug rather than bad input; ``state`` holds a dump of the
    relevant data for the report.
    """

    def __init__(self, msg: str, state: dict[str, Any] | None = None) -> None:
        super().__init__(msg)
        self.state = state or {}


class TheoremContradictionError(RuntimeError):
    """A property that the underlying theorem guarantees failed on this input.

    ``witness`` is the simplex where it failed. Firing is a finding worth
    reporting, not an input problem.
    """

    def __init__(self, msg: str, witness: Any = None) -> None:
        super().__init__(msg)
        self.witness = witness


class PipelineError(RuntimeError):
    """Two consecutive stages of a pipeline do not meet in the same complex."""

    def __init__(self, msg: str, stage: int, name: str = "") -> None:
        super().__init__(msg)
        self.stage = stage
        self.name = name
