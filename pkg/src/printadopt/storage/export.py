"""CSV export of sweep cells (region maps and profit surfaces)."""

from __future__ import annotations

import csv
import io
from pathlib import Path

from printadopt.common.exceptions import DomainError, OutputError
from printadopt.sweep.models import RegionCell


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.10g}"


def csv_fields(cells: list[RegionCell]) -> list[str]:
    dims = len(cells[0].coords)
    n = max(len(cell.q) for cell in cells)
    return (
        [f"coord{i}" for i in range(1, dims + 1)]
        + ["case", "v", "pi_M", "pi_R"]
        + [f"w_{i}" for i in range(1, n + 1)]
        + [f"q_{i}" for i in range(1, n + 1)]
        + ["lambda"]
    )


def format_csv(cells: list[RegionCell]) -> str:
    """Render cells in coordinate order, 10 significant digits, '\\n' line endings."""
    if not cells:
        raise DomainError("No sweep cells to export")
    fields = csv_fields(cells)
    n = sum(1 for f in fields if f.startswith("q_"))

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for cell in sorted(cells, key=lambda c: c.coords):
        row = {f"coord{i}": _fmt(x) for i, x in enumerate(cell.coords, 1)}
        row.update({
            "case": cell.case,
            "v": "" if cell.v is None else str(cell.v),
            "pi_M": _fmt(cell.pi_M),
            "pi_R": _fmt(cell.pi_R),
            "lambda": _fmt(cell.shadow_price),
        })
        for i in range(n):
            row[f"w_{i + 1}"] = _fmt(cell.w[i]) if i < len(cell.w) else ""
            row[f"q_{i + 1}"] = _fmt(cell.q[i]) if i < len(cell.q) else ""
        writer.writerow(row)
    return buf.getvalue()


def emit_csv(cells: list[RegionCell], path: str | Path) -> Path:
    text = format_csv(cells)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(str(path), e) from e
    return path
