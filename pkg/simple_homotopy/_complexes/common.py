from __future__ import annotations

import logging

import structlog

logger = logging.getLogger("simple_homotopy.complexes")
logger.setLevel(logging.INFO)
log = structlog.wrap_logger(logger)


class InputError(ValueError):
    """Invalid input to a constructor or operation.

    Raised for precondition violations on data supplied by the caller, e.g. a
    simplex that is not in the complex or a cyclic cover relation.
    """


class EmptyComplexError(InputError):
    """An operation needs a nonempty complex but got an empty one."""


class SizeCapError(InputError):
    """An enumeration would exceed the configured size cap.

    Pass ``unsafe=True`` (``--unsafe-size`` on the command line) to lift it.
    """


def check_cap(name: str, size: int, cap: int, *, unsafe: bool = False) -> None:
    """Raise `SizeCapError` if ``size`` exceeds ``cap`` (unless ``unsafe``)."""
    if unsafe or size <= cap:
        return
    msg = f"{name} has size {size}, which exceeds the cap of {cap}."
    raise SizeCapError(msg)
