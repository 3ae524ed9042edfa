"""Settings for one command-line invocation."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any

from simple_homotopy._complexes.common import InputError
from simple_homotopy._complexes.simplicial import make_simplex
from simple_homotopy.utils import parse_token

if TYPE_CHECKING:
    import argparse

    from simple_homotopy._complexes.simplicial import Simplex

ENV_PREFIX = "SIMPLE_HOMOTOPY_"

DEFAULT_CAPS: dict[str, int] = {
    "graph_vertices": 8,
    "lattice_elements": 14,
    "partition_n": 7,
    "search_faces": 18,
    "saturation_elements": 20,
}

# Which cap ``--cap`` overrides, per subcommand and kind.
CAP_FOR: dict[tuple[str, str | None], str] = {
    ("build", "neighborhood"): "graph_vertices",
    ("build", "lovasz"): "graph_vertices",
    ("build", "homk2"): "graph_vertices",
    ("build", "gamma"): "lattice_elements",
    ("build", "jl"): "lattice_elements",
    ("build", "dgn"): "partition_n",
    ("build", "partition"): "partition_n",
    ("deform", "hom2n"): "graph_vertices",
    ("deform", "bdnbhd2lovasz"): "graph_vertices",
    ("deform", "jl2order"): "lattice_elements",
    ("deform", "bdgamma2order"): "lattice_elements",
    ("deform", "order2crosscut"): "lattice_elements",
    ("probe-conjecture", None): "lattice_elements",
    ("search-witness", None): "graph_vertices",
}


def caps_from_env(environ: dict[str, str] | None = None) -> dict[str, int]:
    """Default caps, overridden by ``SIMPLE_HOMOTOPY_<CAP>`` environment variables."""
    environ = os.environ if environ is None else environ
    caps = dict(DEFAULT_CAPS)
    for name in caps:
        value = environ.get(f"{ENV_PREFIX}{name.upper()}")
        if value is None:
            continue
        try:
            caps[name] = int(value)
        except ValueError:
            msg = f"{ENV_PREFIX}{name.upper()}={value!r} is not an integer."
            raise InputError(msg) from None
    return caps


@dataclass
class CommandConfig:
    """Everything a subcommand needs, built from the parsed arguments.

    Caps must be positive. ``unsafe_size`` lifts all of them.
    """

    subcommand: str
    kind: str | None = None
    inputs: list[Path] = field(default_factory=list)
    output: Path | None = None
    caps: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_CAPS))
    unsafe_size: bool = False
    seed: int = 0
    trials: int = 50
    n: int | None = None
    simplex: Simplex | None = None
    crosscut: Path | None = None
    with_progress_bar: bool = True

    def __post_init__(self) -> None:
        for name, value in self.caps.items():
            if value <= 0:
                msg = f"Cap {name} must be positive, got {value}."
                raise InputError(msg)
        if self.trials < 0:
            msg = "The number of trials cannot be negative."
            raise InputError(msg)

    @property
    def input(self) -> Path:
        if not self.inputs:
            msg = f"{self.subcommand} needs --input."
            raise InputError(msg)
        return self.inputs[0]

    def cap(self, name: str) -> int:
        return self.caps[name]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CommandConfig:
        caps = caps_from_env()
        kind = getattr(args, "kind", None)
        if getattr(args, "cap", None) is not None:
            name = CAP_FOR.get((args.command, kind))
            if name is None:
                msg = f"--cap has no effect on {args.command}."
                raise InputError(msg)
            caps[name] = args.cap
        simplex = None
        if getattr(args, "simplex", None):
            simplex = make_simplex(parse_token(t) for t in args.simplex.split())
        kwargs: dict[str, Any] = {
            "subcommand": args.command,
            "kind": kind,
            "inputs": [Path(p) for p in getattr(args, "input", None) or []],
            "output": Path(args.output) if getattr(args, "output", None) else None,
            "caps": caps,
            "unsafe_size": args.unsafe_size,
            "seed": args.seed,
            "trials": getattr(args, "trials", 50),
            "n": getattr(args, "n", None),
            "simplex": simplex,
            "crosscut": Path(args.crosscut) if getattr(args, "crosscut", None) else None,
            "with_progress_bar": not args.no_progress,
        }
        return cls(**kwargs)
