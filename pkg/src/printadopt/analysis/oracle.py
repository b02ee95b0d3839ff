"""Brute-force and simulation checks that share no code path with the analytic solvers.

- ``grid_equilibrium`` searches quantity space directly, pricing each order by
  w = r (1 - F(q)).
- ``mc_retailer_profit`` estimates E[r min(q, D)] - w q by inverse-CDF sampling.
- ``soc_audit`` checks second-order conditions at a proposed solution.
"""

from __future__ import annotations

import logging
from itertools import combinations

import numpy as np

from printadopt.common.exceptions import ComplexityError, DomainError
from printadopt.game.market import retailer_expected_profit, wholesale_for_quantity
from printadopt.game.models import Case, EquilibriumSolution, Instance, Product
from printadopt.game.solver import adoption_branch
from printadopt.game.two_product import capacitated_objective_2

logger = logging.getLogger(__name__)

MIN_GRID = 10
MIN_SAMPLES = 1000
MAX_EXHAUSTIVE_N = 3
FACE_TOL = 1e-9
PROFIT_TIE_TOL = 1e-9
RANDOM_STARTS = 8
MAX_SWEEPS = 200


def grid_equilibrium(
    inst: Instance,
    grid_n: int = 400,
    adoption: bool | None = None,
    exhaustive: bool | None = None,
    seed: int = 0,
) -> EquilibriumSolution:
    """Best manufacturer profit over a quantity grid.

    ``adoption`` forces the v = 1 (True) or v = 0 (False) branch; None compares both.
    Exhaustive enumeration of the capacity-feasible set is used for n <= 3; larger
    instances run coordinate descent unless ``exhaustive=True``, which is refused.
    """
    if grid_n < MIN_GRID:
        raise DomainError(f"grid_n must be >= {MIN_GRID}, got {grid_n}")
    if exhaustive and inst.n > MAX_EXHAUSTIVE_N:
        raise ComplexityError(
            f"Exhaustive grid over {inst.n} products ({grid_n}^{inst.n - 1} cells) refused"
        )

    keep = _grid_no_adoption(inst, grid_n) if adoption is not True else None
    if adoption is False:
        return keep

    if inst.n <= MAX_EXHAUSTIVE_N and exhaustive is not False:
        adopt = _grid_adoption_exhaustive(inst, grid_n)
    else:
        adopt = _grid_adoption_descent(inst, grid_n, seed)

    if keep is None or adopt.pi_M > keep.pi_M + PROFIT_TIE_TOL:
        return adopt
    return keep


def mc_retailer_profit(
    q: float,
    w: float,
    product: Product,
    samples: int,
    seed: int | np.random.SeedSequence = 0,
    batch_size: int = 100_000,
) -> tuple[float, float]:
    """Sample mean and standard error of r min(q, D) - w q.

    Batches draw from child streams of one seed sequence, so the estimate is a pure
    function of (seed, samples, batch_size).
    """
    if samples < MIN_SAMPLES:
        raise DomainError(f"Monte-Carlo needs at least {MIN_SAMPLES} samples, got {samples}")
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    sizes = [batch_size] * (samples // batch_size)
    if samples % batch_size:
        sizes.append(samples % batch_size)
    streams = root.spawn(len(sizes))

    values = np.concatenate([
        product.r * np.minimum(q, product.demand.sample(np.random.default_rng(stream), size)) - w * q
        for stream, size in zip(streams, sizes)
    ])
    stderr = float(values.std(ddof=1) / np.sqrt(samples))
    return float(values.mean()), stderr


def soc_audit(inst: Instance, sol: EquilibriumSolution) -> bool:
    """Second-order and feasibility checks at an equilibrium."""
    checks: list[bool] = [_feasible(inst, sol)]

    if inst.n == 2 and sol.case is Case.CAPACITY_BOUND and not sol.corner and inst.Q > 0:
        checks.append(_reduced_curvature_negative(inst, sol.q[0]))
    else:
        for q, p in zip(sol.q, inst.products):
            if q > 0:
                checks.append(-2.0 * p.r * p.demand.pdf(min(q, p.demand.upper)) < 0)

    ok = all(checks)
    if not ok:
        logger.debug("Second-order audit failed for %s", sol)
    return ok


# --- grid search internals ---

def _product_grid(product: Product, grid_n: int, cost: float) -> tuple[np.ndarray, np.ndarray]:
    xs = np.linspace(0.0, product.demand.upper, grid_n)
    profits = (product.r * (1.0 - product.demand.cdf(xs)) - cost) * xs
    return xs, profits


def _profit_at(product: Product, q: float, cost: float) -> float:
    return (wholesale_for_quantity(q, product) - cost) * q


def _grid_no_adoption(inst: Instance, grid_n: int) -> EquilibriumSolution:
    qs = []
    for p in inst.products:
        xs, profits = _product_grid(p, grid_n, p.c_m)
        qs.append(float(xs[int(np.argmax(profits))]))
    return _solution_from_quantities(inst, qs, v=0)


def _grid_adoption_exhaustive(inst: Instance, grid_n: int) -> EquilibriumSolution:
    *head, last = inst.products
    grids = [_product_grid(p, grid_n, p.c_p) for p in head]

    if grids:
        mesh_q = np.meshgrid(*[g[0] for g in grids], indexing="ij")
        mesh_p = np.meshgrid(*[g[1] for g in grids], indexing="ij")
        prefix_q = [m.ravel() for m in mesh_q]
        used = np.sum(prefix_q, axis=0)
        prefix_profit = np.sum([m.ravel() for m in mesh_p], axis=0)
    else:
        prefix_q = []
        used = np.zeros(1)
        prefix_profit = np.zeros(1)

    remaining = inst.Q - used
    feasible = remaining >= -FACE_TOL
    remaining = np.maximum(remaining, 0.0)

    xs, profits = _product_grid(last, grid_n, last.c_p)
    best_idx = np.zeros(grid_n, dtype=int)
    for i in range(1, grid_n):
        best_idx[i] = i if profits[i] > profits[best_idx[i - 1]] else best_idx[i - 1]
    slot = np.searchsorted(xs, remaining, side="right") - 1
    grid_last_q = xs[best_idx[slot]]
    grid_last_p = profits[best_idx[slot]]

    face_q = np.minimum(remaining, last.demand.upper)
    face_p = (last.r * (1.0 - last.demand.cdf(face_q)) - last.c_p) * face_q
    use_face = face_p > grid_last_p
    last_q = np.where(use_face, face_q, grid_last_q)
    total = np.where(feasible, prefix_profit + np.where(use_face, face_p, grid_last_p), -np.inf)

    k = int(np.argmax(total))
    qs = [float(col[k]) for col in prefix_q] + [float(last_q[k])]
    return _solution_from_quantities(inst, qs, v=1)


def _grid_adoption_descent(inst: Instance, grid_n: int, seed: int) -> EquilibriumSolution:
    rng = np.random.default_rng(seed)
    starts = [list(adoption_branch(inst).q)]
    uppers = np.array([p.demand.upper for p in inst.products])
    for _ in range(RANDOM_STARTS):
        q = rng.random(inst.n) * uppers
        if q.sum() > inst.Q:
            q *= inst.Q / q.sum()
        starts.append(list(q))

    best_q, best_value = None, -np.inf
    for start in starts:
        q, value = _coordinate_descent(inst, start, grid_n)
        if value > best_value:
            best_q, best_value = q, value
    return _solution_from_quantities(inst, best_q, v=1)


def _coordinate_descent(inst: Instance, start: list[float], grid_n: int) -> tuple[list[float], float]:
    products = inst.products
    q = [min(max(x, 0.0), p.demand.upper) for x, p in zip(start, products)]
    own = [_profit_at(p, x, p.c_p) for p, x in zip(products, q)]

    for _ in range(MAX_SWEEPS):
        before = sum(own)
        for i, p in enumerate(products):
            room = min(p.demand.upper, inst.Q - (sum(q) - q[i]))
            if room <= 0:
                continue
            cand = np.append(np.linspace(0.0, room, grid_n), q[i])
            values = (p.r * (1.0 - p.demand.cdf(cand)) - p.c_p) * cand
            j = int(np.argmax(values))
            if values[j] > own[i]:
                q[i], own[i] = float(cand[j]), float(values[j])
        for i, j in combinations(range(inst.n), 2):
            pi, pj = products[i], products[j]
            lo = -min(q[i], pj.demand.upper - q[j])
            hi = min(pi.demand.upper - q[i], q[j])
            if hi - lo <= 0:
                continue
            shift = np.append(np.linspace(lo, hi, grid_n), 0.0)
            qi = np.clip(q[i] + shift, 0.0, pi.demand.upper)
            qj = np.clip(q[j] - shift, 0.0, pj.demand.upper)
            vi = (pi.r * (1.0 - pi.demand.cdf(qi)) - pi.c_p) * qi
            vj = (pj.r * (1.0 - pj.demand.cdf(qj)) - pj.c_p) * qj
            k = int(np.argmax(vi + vj))
            if vi[k] + vj[k] > own[i] + own[j]:
                q[i], q[j] = float(qi[k]), float(qj[k])
                own[i], own[j] = float(vi[k]), float(vj[k])
        if sum(own) - before <= 1e-12:
            break
    return q, sum(own) - inst.K


def _solution_from_quantities(inst: Instance, qs: list[float], v: int) -> EquilibriumSolution:
    ws = [wholesale_for_quantity(q, p) for q, p in zip(qs, inst.products)]
    costs = [p.c_p if v else p.c_m for p in inst.products]
    profit = sum((w - c) * q for w, c, q in zip(ws, costs, qs))
    retailer = sum(retailer_expected_profit(q, w, p) for q, w, p in zip(qs, ws, inst.products))
    if not v:
        case = Case.NO_ADOPTION
    elif inst.Q - sum(qs) <= FACE_TOL:
        case = Case.CAPACITY_BOUND
    else:
        case = Case.UNCONSTRAINED
    return EquilibriumSolution(
        v=v,
        w=tuple(ws),
        q=tuple(qs),
        case=case,
        pi_M=profit - inst.K if v else profit,
        pi_R=retailer,
        notes=("grid",),
    )


# --- second-order internals ---

def _feasible(inst: Instance, sol: EquilibriumSolution) -> bool:
    for q, p in zip(sol.q, inst.products):
        if q < -FACE_TOL or q > p.demand.upper * (1 + 1e-12):
            return False
    return not sol.v or sol.total_quantity <= inst.Q + 1e-8


def _reduced_curvature_negative(inst: Instance, q1: float) -> bool:
    p1, p2 = inst.products
    lo = max(0.0, inst.Q - p2.demand.upper)
    hi = min(inst.Q, p1.demand.upper)
    h = min(1e-4 * inst.Q, q1 - lo, hi - q1)
    if h <= 0:
        return True
    second = (
        capacitated_objective_2(inst, q1 + h)
        - 2.0 * capacitated_objective_2(inst, q1)
        + capacitated_objective_2(inst, q1 - h)
    )
    return second < 0
