"""Utility functions for simple_homotopy."""

from __future__ import annotations

import functools
import os
import re
import uuid
from contextlib import contextmanager, suppress
from pathlib import Path
from typing import IO, TYPE_CHECKING, Any, Union

import psutil
from rich.console import Console
from tqdm.auto import tqdm

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

console = Console()

Label = Union[int, str, tuple["Label", ...]]
"""A vertex or element label: an atomic name or a tuple of labels."""

_INT_TOKEN = re.compile(r"^-?\d+$")


@functools.lru_cache(maxsize=None, typed=True)
def label_key(label: Label) -> tuple:
    """Sort key that totally orders labels of mixed type.

    Atoms come before tuples, integers before strings, and tuples are
    compared entrywise (lexicographically on their own keys).
    """
    if isinstance(label, tuple):
        return (1, tuple(label_key(x) for x in label))
    if isinstance(label, bool):
        msg = f"Boolean labels are not supported: {label!r}"
        raise TypeError(msg)
    if isinstance(label, int):
        return (0, 0, label)
    if isinstance(label, str):
        return (0, 1, label)
    msg = f"Unsupported label type {type(label).__name__}: {label!r}"
    raise TypeError(msg)


def sort_labels(labels: Iterable[Label]) -> tuple[Label, ...]:
    """Return the labels as a tuple in canonical order."""
    return tuple(sorted(labels, key=label_key))


def simplex_key(simplex: tuple[Label, ...]) -> tuple:
    """Sort key for canonical simplices: dimension first, then lexicographic."""
    return (len(simplex), tuple(label_key(v) for v in simplex))


def encode_label(label: Label) -> Any:
    """Turn a label into a JSON-serializable object (tuples become lists)."""
    if isinstance(label, tuple):
        return [encode_label(x) for x in label]
    return label


def decode_label(obj: Any) -> Label:
    """Inverse of `encode_label`."""
    if isinstance(obj, list):
        return tuple(decode_label(x) for x in obj)
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return obj
    msg = f"Cannot decode {obj!r} as a label."
    raise ValueError(msg)


def parse_token(token: str) -> Label:
    """Parse a whitespace-separated token from a text file into a label."""
    return int(token) if _INT_TOKEN.match(token) else token


def format_label(label: Label) -> str:
    """Human readable rendering, e.g. ``((1, 2), (3,))`` becomes ``{{1,2},{3}}``."""
    if isinstance(label, tuple):
        return "{" + ",".join(format_label(x) for x in label) + "}"
    return str(label)


def _progress(
    seq: Iterable[Any],
    with_progress_bar: bool = True,  # noqa: FBT001, FBT002
    desc: str = "",
) -> Iterable | tqdm:
    if not with_progress_bar:
        return seq
    return tqdm(list(seq), desc=desc)


def _resource_usage() -> dict[str, float]:
    process = psutil.Process()
    return {
        "cpu_usage": psutil.cpu_percent(),
        "mem_usage": psutil.virtual_memory().percent,
        "rss_mb": round(process.memory_info().rss / 2**20, 1),
    }


@contextmanager
def atomic_write(dest: os.PathLike | str, mode: str = "w") -> Iterator[IO[Any]]:
    """Write to a temporary file next to 'dest' and move it into place on success."""
    temp_dest = Path(dest).with_suffix(f".temp.{os.getpid()}.{uuid.uuid4()}")
    try:
        with temp_dest.open(mode) as fp:
            yield fp
        os.replace(temp_dest, dest)  # noqa: PTH105
    except Exception:
        with suppress(FileNotFoundError):
            os.remove(temp_dest)  # noqa: PTH107
        raise
