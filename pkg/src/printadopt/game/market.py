"""Single-product newsvendor layer.

The retailer orders q_nv(w) = F^-1(1 - w/r) at wholesale price w. The manufacturer,
anticipating that response, picks the quantity solving

    r (1 - F(q)) - r q f(q) = c

which has a unique root under IGFR demand. The left-hand side is the manufacturer's
marginal revenue in quantity space and is reused by the multi-product solvers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from printadopt.common.exceptions import DomainError
from printadopt.common.rootfind import QUANTITY_TOL, bisect_root
from printadopt.game.demand import check_igfr
from printadopt.game.models import Case, EquilibriumSolution, Instance, Product

logger = logging.getLogger(__name__)

FALLBACK_GRID = 2048
SUPPORT_SLACK = 1e-12


@dataclass(frozen=True)
class BenchmarkOptimum:
    q: float
    w: float
    profit: float
    igfr_ok: bool = True


def best_response_quantity(w: float, product: Product) -> float:
    """Retailer's newsvendor order at wholesale price ``w``; 0 once w >= r."""
    if w < 0:
        raise DomainError(f"Wholesale price must be >= 0, got {w}")
    if w >= product.r:
        return 0.0
    return float(product.demand.quantile(1.0 - w / product.r))


def retailer_expected_profit(q: float, w: float, product: Product) -> float:
    if w < 0:
        raise DomainError(f"Wholesale price must be >= 0, got {w}")
    return product.r * product.demand.expected_min(q) - w * q


def wholesale_for_quantity(q: float, product: Product) -> float:
    """Price w = r (1 - F(q)) at which the retailer orders exactly ``q``."""
    q = _clamp_to_support(q, product)
    return product.r * (1.0 - float(product.demand.cdf(q)))


def marginal_revenue(q: float, product: Product) -> float:
    """r (1 - F(q)) - r q f(q): derivative of w(q) q with w(q) = r (1 - F(q))."""
    q = _clamp_to_support(q, product)
    survival = 1.0 - float(product.demand.cdf(q))
    return product.r * survival - product.r * q * product.demand.pdf(q)


def manufacturer_profit(w: float, c: float, product: Product) -> float:
    """Benchmark objective (w - c) q_nv(w)."""
    return (w - c) * best_response_quantity(w, product)


def benchmark_optimum(c: float, product: Product) -> BenchmarkOptimum:
    """Manufacturer's optimal quantity, price and profit at unit cost ``c``."""
    if c < 0:
        raise DomainError(f"Unit cost must be >= 0, got {c}")
    if c >= product.r:
        return BenchmarkOptimum(q=0.0, w=product.r, profit=0.0)

    if not check_igfr(product.demand):
        return _grid_optimum(c, product)

    hi = float(product.demand.quantile(1.0 - c / product.r))
    q = bisect_root(
        lambda x: marginal_revenue(x, product) - c,
        0.0,
        hi,
        xtol=QUANTITY_TOL,
        what="benchmark first-order condition",
    )
    w = wholesale_for_quantity(q, product)
    return BenchmarkOptimum(q=q, w=w, profit=(w - c) * q)


def independent_solution(inst: Instance, adopt: bool) -> EquilibriumSolution:
    """Per-product benchmark optima at c_p (adopt) or c_m, with no shared capacity."""
    qs, ws, profit, retailer = [], [], 0.0, 0.0
    for product in inst.products:
        cost = product.c_p if adopt else product.c_m
        opt = benchmark_optimum(cost, product)
        qs.append(opt.q)
        ws.append(opt.w)
        profit += opt.profit
        retailer += retailer_expected_profit(opt.q, opt.w, product)
    return EquilibriumSolution(
        v=int(adopt),
        w=tuple(ws),
        q=tuple(qs),
        case=Case.UNCONSTRAINED if adopt else Case.NO_ADOPTION,
        pi_M=profit - inst.K if adopt else profit,
        pi_R=retailer,
    )


def allocation_solution(
    inst: Instance,
    quantities: list[float],
    shadow_price: float,
    corner: bool = False,
    notes: tuple[str, ...] = (),
) -> EquilibriumSolution:
    """Adoption solution at a given capacity-bound allocation."""
    ws = [wholesale_for_quantity(q, p) for q, p in zip(quantities, inst.products)]
    profit = sum((w - p.c_p) * q for w, q, p in zip(ws, quantities, inst.products))
    retailer = sum(
        retailer_expected_profit(q, w, p) for w, q, p in zip(ws, quantities, inst.products)
    )
    return EquilibriumSolution(
        v=1,
        w=tuple(ws),
        q=tuple(float(q) for q in quantities),
        case=Case.CAPACITY_BOUND,
        pi_M=profit - inst.K,
        pi_R=retailer,
        shadow_price=max(0.0, shadow_price),
        corner=corner,
        notes=notes,
    )


def empty_capacity_solution(inst: Instance) -> EquilibriumSolution:
    """Adoption with Q = 0: nothing is produced and K is sunk."""
    lam = max(0.0, max(p.r - p.c_p for p in inst.products))
    return allocation_solution(inst, [0.0] * inst.n, lam)


def _clamp_to_support(q: float, product: Product) -> float:
    upper = product.demand.upper
    if q < -SUPPORT_SLACK * upper or q > upper * (1.0 + SUPPORT_SLACK):
        raise DomainError(f"Quantity {q} outside demand support [0, {upper}]")
    return min(max(q, 0.0), upper)


def _grid_optimum(c: float, product: Product) -> BenchmarkOptimum:
    upper = product.demand.upper

    def objective(q: float) -> float:
        return (wholesale_for_quantity(q, product) - c) * q

    grid = np.linspace(0.0, upper, FALLBACK_GRID + 1)
    values = np.array([objective(float(q)) for q in grid])
    best = int(np.argmax(values))
    step = upper / FALLBACK_GRID
    lo, hi = max(0.0, grid[best] - step), min(upper, grid[best] + step)
    res = minimize_scalar(
        lambda q: -objective(q), bounds=(lo, hi), method="bounded", options={"xatol": QUANTITY_TOL}
    )
    q = float(res.x) if -res.fun >= values[best] else float(grid[best])
    logger.debug("Grid optimum at c=%.6g: q=%.6g", c, q)
    w = wholesale_for_quantity(q, product)
    return BenchmarkOptimum(q=q, w=w, profit=(w - c) * q, igfr_ok=False)
