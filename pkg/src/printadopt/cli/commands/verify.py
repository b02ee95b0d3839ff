"""Check an instance's equilibrium against the grid and Monte-Carlo oracles."""

from __future__ import annotations

import click
from rich.console import Console
from rich.table import Table

from printadopt.analysis.pipeline import VerificationPipeline
from printadopt.cli.output import reported_errors
from printadopt.config.loader import load_instance


@click.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--grid", "grid_n", type=int, default=None, help="Grid points per product")
@click.option("--mc", "samples", type=int, default=None, help="Monte-Carlo samples per product")
@click.option("--seed", type=int, default=None, help="Random seed")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def verify(
    ctx: click.Context,
    config: str,
    grid_n: int | None,
    samples: int | None,
    seed: int | None,
    as_json: bool,
) -> None:
    """Compare analytic and brute-force profits, simulate retailer profit, audit SOCs."""
    settings = ctx.obj["settings"]
    console = Console()

    with reported_errors(console):
        inst = load_instance(config)
        report = VerificationPipeline(settings.oracle).run(inst, grid_n=grid_n, samples=samples, seed=seed)

    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return

    table = Table(title="Verification", show_header=False)
    table.add_column("Check", style="bold")
    table.add_column("Value", justify="right")
    table.add_row("Analytic profit", f"{report.analytic_pi:.6g} ({report.analytic_case})")
    table.add_row(f"Grid profit (n={report.grid_n})", f"{report.oracle_pi:.6g} ({report.oracle_case})")
    table.add_row("Gap", f"{report.abs_gap:.3g}")
    table.add_row("Retailer profit", f"{report.analytic_pi_R:.6g}")
    table.add_row(
        f"MC retailer ({report.samples} draws)",
        f"{report.mc_mean:.6g} ± {report.mc_stderr:.3g}",
    )
    mc = "[green]ok[/green]" if report.mc_consistent else "[red]outside 3 SE[/red]"
    table.add_row("MC consistency", mc)
    table.add_row("Second-order", "[green]ok[/green]" if report.soc_ok else "[red]failed[/red]")
    console.print(table)
    for note in report.notes:
        console.print(f"[yellow]- {note}[/yellow]")
    console.print(f"[dim]{report.elapsed_ms} ms, seed {report.seed}[/dim]")
