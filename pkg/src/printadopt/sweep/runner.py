"""Parameter sweeps over equilibrium regions and bisection for region boundaries."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product as cartesian

import numpy as np

from printadopt.common.exceptions import BracketError, ConfigError, PrintadoptError
from printadopt.common.rootfind import bisect_root
from printadopt.game.models import Case, Instance
from printadopt.game.solver import adoption_branch, equilibrium
from printadopt.sweep.models import RegionCell, SweepSpec
from printadopt.sweep.params import apply_params, parse_path

logger = logging.getLogger(__name__)

BOUNDARY_KINDS = ("adoption", "capacity")


def classify(inst: Instance) -> Case:
    return equilibrium(inst).case


def grid_points(spec: SweepSpec) -> list[dict[str, float]]:
    """Parameter assignments for every cell, in coordinate order."""
    axes = [spec] if spec.second is None else [spec, spec.second]
    values = [np.linspace(axis.start, axis.stop, axis.steps) for axis in axes]
    points = []
    for coords in cartesian(*values):
        assignment: dict[str, float] = {}
        for axis, x in zip(axes, coords):
            assignment[axis.param_path] = float(x)
            for link in axis.linked:
                assignment[link.param_path] = link.scale * float(x)
        points.append(assignment)
    return points


def evaluate_cell(inst: Instance, coords: tuple[float, ...], assignment: dict[str, float]) -> RegionCell:
    """Solve one cell; failures become error cells instead of aborting the sweep."""
    try:
        solution = equilibrium(apply_params(inst, assignment))
        return RegionCell.from_solution(coords, solution)
    except PrintadoptError as e:
        logger.warning("Sweep cell %s failed: %s", coords, e)
        return RegionCell.failed(coords, e)


def sweep(inst: Instance, spec: SweepSpec, workers: int = 1) -> list[RegionCell]:
    """Evaluate the equilibrium at every grid point of a 1-D or 2-D sweep."""
    axes = [spec] if spec.second is None else [spec, spec.second]
    for axis in axes:
        parse_path(axis.param_path)
        for link in axis.linked:
            parse_path(link.param_path)

    points = grid_points(spec)
    coords = [tuple(point[axis.param_path] for axis in axes) for point in points]
    logger.info("Sweeping %d cells over %s", len(points), ", ".join(a.param_path for a in axes))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(evaluate_cell, [inst] * len(points), coords, points))
    else:
        cells = [evaluate_cell(inst, c, p) for c, p in zip(coords, points)]

    failed = sum(cell.is_error for cell in cells)
    if failed:
        logger.warning("%d of %d sweep cells failed", failed, len(cells))
    return sorted(cells, key=lambda cell: cell.coords)


def boundary_label(inst: Instance, kind: str) -> bool:
    """Adoption: does the equilibrium adopt. Capacity: does the adoption branch bind."""
    if kind == "adoption":
        return bool(equilibrium(inst).v)
    if kind == "capacity":
        return adoption_branch(inst).case is Case.CAPACITY_BOUND
    raise ConfigError(f"Unknown boundary kind '{kind}', expected one of {BOUNDARY_KINDS}")


def find_boundary(
    inst: Instance,
    param_path: str,
    kind: str,
    lo: float,
    hi: float,
    tol: float = 1e-6,
) -> float:
    """Parameter value in [lo, hi] where the adoption or capacity label flips."""
    if kind not in BOUNDARY_KINDS:
        raise ConfigError(f"Unknown boundary kind '{kind}', expected one of {BOUNDARY_KINDS}")
    parse_path(param_path)

    def label(x: float) -> bool:
        return boundary_label(apply_params(inst, {param_path: x}), kind)

    at_lo = label(lo)
    if label(hi) == at_lo:
        raise BracketError(f"{kind} label of {param_path}", lo, hi)

    x = bisect_root(lambda x: -1.0 if label(x) == at_lo else 1.0, lo, hi, xtol=tol, what=param_path)
    logger.info("%s boundary in %s at %.8g", kind, param_path, x)
    return x
