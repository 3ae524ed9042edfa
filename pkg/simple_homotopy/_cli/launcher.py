from __future__ import annotations

import argparse
import sys
from typing import TYPE_CHECKING

from rich.markup import escape

from simple_homotopy._cli import commands
from simple_homotopy._cli.common import configure_logging, log
from simple_homotopy._cli.config import CommandConfig
from simple_homotopy._complexes.common import InputError, SizeCapError
from simple_homotopy._complexes.lattice import NotALatticeError
from simple_homotopy._version import __version__
from simple_homotopy.utils import console

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

EXIT_INPUT_ERROR = 2
EXIT_SIZE_CAP = 3

HANDLERS: dict[str, Callable[[CommandConfig], int]] = {
    "build": commands.cmd_build,
    "deform": commands.cmd_deform,
    "verify": commands.cmd_verify,
    "homology": commands.cmd_homology,
    "probe-conjecture": commands.cmd_probe_conjecture,
    "search-witness": commands.cmd_search_witness,
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", action="append", type=str, default=None)
    parser.add_argument("--output", action="store", type=str, default=None)
    parser.add_argument("--seed", action="store", type=int, default=0)
    parser.add_argument("--cap", action="store", type=int, default=None)
    parser.add_argument("--unsafe-size", action="store_true", default=False)
    parser.add_argument("--verbose", action="store_true", default=False)
    parser.add_argument("--log-file", action="store", type=str, default=None)
    parser.add_argument("--no-progress", action="store_true", default=False)


def _parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="simple-homotopy",
        description="Build complexes and certified formal deformations between them.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a complex or lattice artifact")
    build.add_argument("kind", choices=commands.BUILD_KINDS)
    build.add_argument("n", nargs="?", type=int, default=None)
    _add_common(build)

    deform = sub.add_parser("deform", help="write and verify a deformation certificate")
    deform.add_argument("kind", choices=commands.DEFORM_PIPELINES)
    deform.add_argument("--simplex", action="store", type=str, default=None)
    deform.add_argument("--crosscut", action="store", type=str, default=None)
    _add_common(deform)

    verify = sub.add_parser("verify", help="replay a certificate file")
    _add_common(verify)

    hom = sub.add_parser("homology", help="integer homology of a complex file")
    _add_common(hom)

    probe = sub.add_parser("probe-conjecture", help="compare crosscut and order complexes")
    probe.add_argument("--trials", action="store", type=int, default=50)
    probe.add_argument("--crosscut", action="store", type=str, default=None)
    _add_common(probe)

    search = sub.add_parser("search-witness", help="look for four nondegenerate Morse stages")
    _add_common(search)
    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``simple-homotopy`` script."""
    args = _parse_args(argv)
    configure_logging(verbose=args.verbose, log_file=args.log_file)
    log.info("parsed args", **vars(args))
    try:
        config = CommandConfig.from_args(args)
        return HANDLERS[args.command](config)
    except SizeCapError as e:
        console.print(f"[red]size cap:[/red] {escape(str(e))}", soft_wrap=True)
        return EXIT_SIZE_CAP
    except (InputError, NotALatticeError, OSError) as e:
        console.print(f"[red]input error:[/red] {escape(str(e))}", soft_wrap=True)
        return EXIT_INPUT_ERROR
    except Exception:
        log.exception("command failed", command=args.command)
        raise


if __name__ == "__main__":
    sys.exit(main())
