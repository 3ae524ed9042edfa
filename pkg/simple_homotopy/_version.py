from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

import versioningit

PROJECT_DIR = Path(__file__).parent.parent
try:
    __version__ = versioningit.get_version(project_dir=PROJECT_DIR)
except versioningit.Error:  # pragma: no cover
    try:
        __version__ = version("simple_homotopy")
    except PackageNotFoundError:
        __version__ = "0.0.0"
