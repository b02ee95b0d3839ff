"""Sweep one or two parameters and emit the region map as CSV."""

from __future__ import annotations

from collections import Counter

import click
from rich.console import Console

from printadopt.cli.output import reported_errors
from printadopt.common.exceptions import ConfigError
from printadopt.config.loader import load_instance
from printadopt.storage.export import emit_csv, format_csv
from printadopt.sweep.models import make_spec
from printadopt.sweep.runner import sweep as run_sweep


def _parse_links(links: tuple[str, ...]) -> list[dict]:
    parsed = []
    for item in links:
        path, sep, scale = item.partition("=")
        if not sep:
            raise ConfigError(f"--link expects PATH=SCALE, got '{item}'")
        try:
            parsed.append({"param_path": path, "scale": float(scale)})
        except ValueError as e:
            raise ConfigError(f"--link scale must be a number, got '{scale}'") from e
    return parsed


@click.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--param", "-p", required=True, help="Swept parameter, e.g. 'products[1].c_p'")
@click.option("--from", "start", type=float, required=True, help="First value")
@click.option("--to", "stop", type=float, required=True, help="Last value")
@click.option("--steps", type=int, default=50, help="Number of grid points (>= 2)")
@click.option("--link", multiple=True, help="PATH=SCALE: set PATH to SCALE x the swept value")
@click.option("--param2", default=None, help="Second swept parameter (2-D map)")
@click.option("--from2", "start2", type=float, default=None)
@click.option("--to2", "stop2", type=float, default=None)
@click.option("--steps2", type=int, default=50)
@click.option("--link2", multiple=True, help="PATH=SCALE attached to the second parameter")
@click.option("--workers", "-w", type=int, default=None, help="Worker processes (default from settings)")
@click.option("--out", "-o", default=None, help="Write CSV here instead of stdout")
@click.pass_context
def sweep(
    ctx: click.Context,
    config: str,
    param: str,
    start: float,
    stop: float,
    steps: int,
    link: tuple[str, ...],
    param2: str | None,
    start2: float | None,
    stop2: float | None,
    steps2: int,
    link2: tuple[str, ...],
    workers: int | None,
    out: str | None,
) -> None:
    """Classify the equilibrium over a parameter grid (data for region maps)."""
    settings = ctx.obj["settings"]
    console = Console(stderr=True)

    with reported_errors(console):
        inst = load_instance(config)
        second = None
        if param2:
            if start2 is None or stop2 is None:
                raise ConfigError("--param2 needs --from2 and --to2")
            second = {
                "param_path": param2, "start": start2, "stop": stop2,
                "steps": steps2, "linked": _parse_links(link2),
            }
        spec = make_spec(
            param_path=param, start=start, stop=stop, steps=steps,
            linked=_parse_links(link), second=second,
        )
        cells = run_sweep(inst, spec, workers=workers or settings.sweep.workers)

        if out:
            path = emit_csv(cells, out)
            counts = Counter(cell.case for cell in cells)
            summary = ", ".join(f"{case}={n}" for case, n in sorted(counts.items()))
            console.print(f"[green]Wrote {len(cells)} cells to {path}[/green] [dim]({summary})[/dim]")
        else:
            click.echo(format_csv(cells), nl=False)
