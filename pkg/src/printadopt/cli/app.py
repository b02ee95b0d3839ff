"""printadopt CLI entrypoint."""

from __future__ import annotations

import logging

import click
from rich.console import Console

from printadopt.cli.output import reported_errors
from printadopt.config.loader import load_settings


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%H:%M:%S",
    )


@click.group()
@click.option("--settings", "-s", default=None, help="Path to settings.yaml config")
@click.option("--verbose", "-v", is_flag=True, help="Enable debug logging")
@click.pass_context
def cli(ctx: click.Context, settings: str | None, verbose: bool) -> None:
    """printadopt — 3D-printing adoption equilibria for a manufacturer and a newsvendor retailer."""
    console = Console(stderr=True)
    with reported_errors(console):
        app_settings = load_settings(settings)
    setup_logging("DEBUG" if verbose else app_settings.logging.level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = app_settings


# Import and register commands
from printadopt.cli.commands.boundary import boundary  # noqa: E402
from printadopt.cli.commands.solve import solve  # noqa: E402
from printadopt.cli.commands.sweep import sweep  # noqa: E402
from printadopt.cli.commands.thresholds import thresholds  # noqa: E402
from printadopt.cli.commands.verify import verify  # noqa: E402

cli.add_command(boundary)
cli.add_command(solve)
cli.add_command(sweep)
cli.add_command(thresholds)
cli.add_command(verify)
