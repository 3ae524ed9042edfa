from __future__ import annotations

import json
import logging
import sys
from typing import TYPE_CHECKING, Any

import structlog

if TYPE_CHECKING:
    from pathlib import Path


def _dumps(event_dict: dict[str, Any], **kwargs: Any) -> str:
    """Custom json.dumps to ensure 'event' key is always first in the JSON output."""
    event = event_dict.pop("event", None)
    return json.dumps({"event": event, **event_dict}, **kwargs)


PROCESSORS = [
    structlog.processors.StackInfoRenderer(),
    structlog.processors.format_exc_info,
    structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M.%S", utc=False),
    structlog.processors.JSONRenderer(serializer=_dumps),
]

package_logger = logging.getLogger("simple_homotopy")
logger = logging.getLogger("simple_homotopy.cli")
logger.setLevel(logging.INFO)
log = structlog.wrap_logger(logger, processors=PROCESSORS)


def configure_logging(*, verbose: bool = False, log_file: str | Path | None = None) -> None:
    """Render all package events as JSON lines on stderr and, optionally, to a file."""
    structlog.configure(processors=PROCESSORS)
    level = logging.INFO if verbose else logging.WARNING
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    stream = logging.StreamHandler(sys.stderr)
    stream.setLevel(level)
    package_logger.addHandler(stream)
    if log_file is not None:  # pragma: no cover
        add_log_file_handler(log_file)


def add_log_file_handler(log_fname: str | Path) -> None:  # pragma: no cover
    """Add a file handler to the logger."""
    fh = logging.FileHandler(log_fname)
    package_logger.addHandler(fh)
