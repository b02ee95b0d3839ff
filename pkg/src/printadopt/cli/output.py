"""Shared console helpers for the commands."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from rich.console import Console

from printadopt.common.exceptions import PrintadoptError


@contextmanager
def reported_errors(console: Console) -> Iterator[None]:
    """Print library errors in red and exit with the error's code."""
    try:
        yield
    except PrintadoptError as e:
        console.print(f"[red]{e}[/red]")
        raise SystemExit(e.exit_code)
