#!/usr/bin/env python3
"""
relsig smoke test: run every verb on the sample documents in docs/samples/
and check the exit codes.

  uv run python scripts/smoke.py            # all cases
  uv run python scripts/smoke.py --list     # just print the cases
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

from relsig.cli.console import fail, info, ok, section  # noqa: E402
from relsig.cli.main import main as relsig  # noqa: E402

SAMPLES = Path(__file__).resolve().parent.parent / "docs" / "samples"

# (label, argv, expected exit code)
CASES: list[tuple[str, list[str], int]] = [
    ("analyze bridge", ["analyze", "bridge.json", "--at", "9/10"], 0),
    ("analyze 2-out-of-3 truth table", ["analyze", "two-of-three.json"], 0),
    (
        "convert signature -> polynomial",
        ["convert", "--from", "signature", "--to", "polynomial", "bridge-signature.json"],
        0,
    ),
    (
        "convert polynomial -> signature (integral)",
        ["convert", "--from", "polynomial", "--to", "signature", "bridge-polynomial.json", "--route", "integral"],
        0,
    ),
    ("dependent, per-subset quality", ["dependent", "first-and-either.json", "first-and-either-quality.json"], 0),
    ("dependent, failure orders", ["dependent", "first-and-either.json", "mixed-orders.json"], 0),
    ("verify bridge", ["verify", "bridge.json"], 0),
    ("verify signature document", ["verify", "bridge-signature.json"], 0),
    ("verify corrupted domination", ["verify", "corrupted-domination.json"], 3),
]


def _absolute(argv: list[str]) -> list[str]:
    return [str(SAMPLES / a) if a.endswith(".json") else a for a in argv]


def run() -> int:
    section(f"relsig smoke  ({SAMPLES})")
    failures = 0
    for label, argv, expected in CASES:
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
            code = relsig(_absolute(argv))
        if code == expected:
            ok(f"{label}  (exit {code})")
        else:
            fail(f"{label}  (exit {code}, expected {expected})")
            failures += 1
    info(f"{len(CASES) - failures}/{len(CASES)} cases passed")
    return 1 if failures else 0


def main() -> None:
    parser = argparse.ArgumentParser(prog="smoke", description="relsig smoke test over docs/samples.")
    parser.add_argument("--list", action="store_true", help="print the cases and exit")
    args = parser.parse_args()
    if args.list:
        for label, argv, expected in CASES:
            print(f"{label:45} relsig {' '.join(argv)}  -> exit {expected}")
        return
    sys.exit(run())


if __name__ == "__main__":
    main()
