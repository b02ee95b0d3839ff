"""Adoption economics for uniform-demand instances."""

from __future__ import annotations

import json

import click
from rich.console import Console
from rich.table import Table

from printadopt.cli.output import reported_errors
from printadopt.config.loader import load_instance
from printadopt.game.two_product import (
    adoption_capital_threshold,
    capacity_gap,
    capacity_gap_squared_form,
)


@click.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def thresholds(ctx: click.Context, config: str, as_json: bool) -> None:
    """Largest fixed cost worth paying, and the profit lost to capacity (two products)."""
    console = Console()

    with reported_errors(console):
        inst = load_instance(config)
        data = {"K": inst.K, "K_max": adoption_capital_threshold(inst)}
        if inst.n == 2:
            data["capacity_gap"] = capacity_gap(inst)
            data["capacity_gap_squared_form"] = capacity_gap_squared_form(inst)

    if as_json:
        click.echo(json.dumps(data, indent=2))
        return

    table = Table(title="Adoption thresholds", show_header=False)
    table.add_column("Quantity", style="bold")
    table.add_column("Value", justify="right")
    table.add_row("Fixed cost K", f"{data['K']:.6g}")
    table.add_row("Break-even K_max", f"{data['K_max']:.6g}")
    if "capacity_gap" in data:
        table.add_row("Capacity gap", f"{data['capacity_gap']:.6g}")
        table.add_row("Capacity gap (squared form)", f"{data['capacity_gap_squared_form']:.6g}")
    console.print(table)

    verdict = "worth adopting" if data["K"] < data["K_max"] else "not worth adopting"
    console.print(f"Unconstrained 3D printing is [bold]{verdict}[/bold] at K={data['K']:g}")
