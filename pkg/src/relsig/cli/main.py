"""
relsig command line.

  relsig analyze   bridge.json [--at 9/10]
  relsig convert   --from tail --to domination tail.json [--route closed]
  relsig dependent system.json quality.json
  relsig verify    bridge.json [--summary]

Documents are read from a path or "-" for stdin; results go to stdout as JSON
unless --output names a file. Errors are printed to stderr as a JSON object
and mapped to exit codes: 1 verification mismatch, 2 unreadable document,
3 invalid input, 4 size cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence

from relsig.cli.commands import cmd_analyze, cmd_convert, cmd_dependent, cmd_verify
from relsig.conversions.vectors import Route
from relsig.core.config import get_settings
from relsig.core.errors import RelsigError
from relsig.schemas.documents import Representation

logger = logging.getLogger(__name__)

_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "analyze": cmd_analyze,
    "convert": cmd_convert,
    "dependent": cmd_dependent,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--route",
        choices=[r.value for r in Route],
        default=None,
        help="formula to use where several exist (default: RELSIG_DEFAULT_ROUTE or 'table')",
    )
    common.add_argument("--output", default="-", help="output path, '-' for stdout (default)")
    common.add_argument(
        "--verify-caps",
        type=int,
        default=None,
        metavar="N",
        help="run the brute-force oracles in verify only up to N components",
    )
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default) or ERROR")

    parser = argparse.ArgumentParser(
        prog="relsig",
        description="Exact conversions among system signatures, domination vectors and reliability polynomials.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "exit codes:\n"
            "  0 ok, 1 verification mismatch, 2 unreadable document, 3 invalid input, 4 size cap\n"
        ),
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")

    analyze = subparsers.add_parser("analyze", parents=[common], help="all representations of a system")
    analyze.add_argument("system", help="system document (path sets or truth table)")
    analyze.add_argument("--at", default=None, metavar="P", help="also report h(P), e.g. 9/10")

    convert = subparsers.add_parser("convert", parents=[common], help="convert one vector into another")
    representations = [r.value for r in Representation]
    convert.add_argument("--from", dest="source", required=True, choices=representations)
    convert.add_argument("--to", dest="target", required=True, choices=representations)
    convert.add_argument("vector", help="vector document")

    dependent = subparsers.add_parser(
        "dependent", parents=[common], help="probability signature for dependent lifetimes"
    )
    dependent.add_argument("system", help="system document")
    dependent.add_argument("quality", help="quality document (per-subset q or failure orders)")

    verify = subparsers.add_parser("verify", parents=[common], help="cross-check every formula and the oracles")
    verify.add_argument("document", help="system document or vector document")
    verify.add_argument("--summary", action="store_true", help="print a ✓/✗ line per check on stderr")

    return parser


def report_error(exc: RelsigError) -> None:
    payload = {
        "error": type(exc).__name__,
        "message": exc.message,
        "exit_code": exc.exit_code,
        "details": exc.details,
    }
    sys.stderr.write(json.dumps(payload, default=str) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 0

    level = (args.log_level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s — %(message)s",
        stream=sys.stderr,
    )
    logger.debug("relsig %s", args.command)

    try:
        return _COMMANDS[args.command](args)
    except RelsigError as exc:
        report_error(exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
