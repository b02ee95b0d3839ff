"""Solve one instance and show the equilibrium."""

from __future__ import annotations

import json

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from printadopt.cli.output import reported_errors
from printadopt.config.loader import load_instance
from printadopt.game.models import Case
from printadopt.game.multi_product import three_product_uniform_closed_form
from printadopt.game.solver import adoption_branch, equilibrium, no_adoption_branch
from printadopt.game.two_product import uniform_closed_form_2, uniform_independent_closed_form

CASE_STYLES = {
    Case.CAPACITY_BOUND: "bold yellow",
    Case.UNCONSTRAINED: "bold green",
    Case.NO_ADOPTION: "bold blue",
}


@click.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--closed-form", is_flag=True, help="Use the uniform-demand closed forms for the winning case")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def solve(ctx: click.Context, config: str, closed_form: bool, as_json: bool) -> None:
    """Compute the equilibrium (v, w, q) for an instance file."""
    console = Console()

    with reported_errors(console):
        inst = load_instance(config)
        sol = equilibrium(inst)
        adopt = adoption_branch(inst)
        keep = no_adoption_branch(inst)
        if closed_form:
            if sol.case is not Case.CAPACITY_BOUND:
                sol = uniform_independent_closed_form(inst, sol.case)
            elif inst.n == 3:
                sol = three_product_uniform_closed_form(inst)
            else:
                sol = uniform_closed_form_2(inst, sol.case)

    if as_json:
        data = sol.to_dict()
        data["branches"] = {"adoption": adopt.pi_M, "no_adoption": keep.pi_M}
        click.echo(json.dumps(data, indent=2))
        return

    table = Table(title=f"Equilibrium — {inst.n} product(s), K={inst.K:g}, Q={inst.Q:g}")
    table.add_column("#", style="bold", justify="right")
    table.add_column("Product", style="cyan")
    table.add_column("r", justify="right")
    table.add_column("c_m", justify="right")
    table.add_column("c_p", justify="right")
    table.add_column("w", justify="right")
    table.add_column("q", justify="right")
    for i, (p, w, q) in enumerate(zip(inst.products, sol.w, sol.q), 1):
        table.add_row(
            str(i), p.name or "-", f"{p.r:g}", f"{p.c_m:g}", f"{p.c_p:g}", f"{w:.6g}", f"{q:.6g}",
        )
    console.print(table)

    style = CASE_STYLES[sol.case]
    lines = [
        f"[{style}]{sol.case.label}: {sol.case}[/{style}]  (v={sol.v})",
        f"Manufacturer profit  {sol.pi_M:.6g}",
        f"Retailer profit      {sol.pi_R:.6g}",
        f"Shadow price         {sol.shadow_price:.6g}",
        f"[dim]adoption branch {adopt.pi_M:.6g} ({adopt.case}) vs traditional {keep.pi_M:.6g}[/dim]",
    ]
    if sol.corner:
        lines.append("[yellow]capacity allocation at a corner[/yellow]")
    console.print(Panel("\n".join(lines), title="Result", expand=False))
