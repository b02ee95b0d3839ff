"""Locate an adoption or capacity boundary by bisection."""

from __future__ import annotations

import json

import click
from rich.console import Console

from printadopt.cli.output import reported_errors
from printadopt.config.loader import load_instance
from printadopt.sweep.runner import BOUNDARY_KINDS, find_boundary


@click.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--param", "-p", required=True, help="Parameter to move, e.g. 'products[1].c_p'")
@click.option("--kind", "-k", type=click.Choice(BOUNDARY_KINDS), required=True,
              help="adoption: v flips; capacity: the adoption branch starts/stops binding")
@click.option("--lo", type=float, required=True, help="Lower end of the bracket")
@click.option("--hi", type=float, required=True, help="Upper end of the bracket")
@click.option("--tol", type=float, default=None, help="Bisection tolerance (default from settings)")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def boundary(
    ctx: click.Context,
    config: str,
    param: str,
    kind: str,
    lo: float,
    hi: float,
    tol: float | None,
    as_json: bool,
) -> None:
    """Find where the equilibrium label changes along one parameter."""
    settings = ctx.obj["settings"]
    console = Console()

    with reported_errors(console):
        inst = load_instance(config)
        value = find_boundary(inst, param, kind, lo, hi, tol=tol or settings.sweep.boundary_tol)

    if as_json:
        click.echo(json.dumps({"param": param, "kind": kind, "value": value}, indent=2))
        return
    console.print(f"[bold]{kind}[/bold] boundary in [cyan]{param}[/cyan]: [green]{value:.6f}[/green]")
