"""
Human-readable output for `relsig verify --summary`.

Everything goes to stderr; stdout carries only the JSON documents.
"""

import sys


def section(label: str) -> None:
    print(f"\n{'─' * 60}", file=sys.stderr)
    print(f"  {label}", file=sys.stderr)
    print(f"{'─' * 60}", file=sys.stderr)


def ok(msg: str) -> None:
    print(f"  ✓  {msg}", file=sys.stderr)


def info(msg: str) -> None:
    print(f"  ·  {msg}", file=sys.stderr)


def fail(msg: str) -> None:
    print(f"  ✗  {msg}", file=sys.stderr)
