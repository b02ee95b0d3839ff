"""n-product game with one shared printer capacity.

Capacity-bound adoption is solved through the shadow price: each product orders the
root of g_i(q) = c_p,i + lambda, and lambda is bisected until the orders fill Q.
Products whose cost plus lambda reaches r drop out at q = 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from printadopt.common.exceptions import DomainError, UnsupportedModelError
from printadopt.common.rootfind import bisect_root
from printadopt.game.demand import check_igfr
from printadopt.game.market import (
    allocation_solution,
    benchmark_optimum,
    empty_capacity_solution,
    independent_solution,
)
from printadopt.game.models import EquilibriumSolution, Instance, Product

logger = logging.getLogger(__name__)

PROFIT_TIE_TOL = 1e-9
CAPACITY_TOL = 1e-9
LAMBDA_TOL = 1e-12
RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class LagrangeState:
    shadow_price: float
    q: tuple[float, ...]

    @property
    def total(self) -> float:
        return float(sum(self.q))


def foc_quantity(product: Product, lam: float) -> float:
    """Quantity where marginal revenue equals c_p + lam (0 once c_p + lam >= r)."""
    if lam < 0:
        raise DomainError(f"Shadow price must be >= 0, got {lam}")
    cost = product.c_p + lam
    if cost >= product.r:
        return 0.0
    return benchmark_optimum(cost, product).q


def lagrange_state(inst: Instance, lam: float) -> LagrangeState:
    return LagrangeState(lam, tuple(foc_quantity(p, lam) for p in inst.products))


def capacity_sum(inst: Instance, lam: float) -> float:
    return lagrange_state(inst, lam).total


def solve_no_adoption_n(inst: Instance) -> EquilibriumSolution:
    return independent_solution(inst, adopt=False)


def solve_adopt_unconstrained_n(inst: Instance) -> EquilibriumSolution:
    return independent_solution(inst, adopt=True)


def solve_adopt_capacitated_n(inst: Instance) -> EquilibriumSolution:
    if inst.Q == 0:
        return empty_capacity_solution(inst)

    unconstrained = solve_adopt_unconstrained_n(inst)
    if unconstrained.total_quantity <= inst.Q + CAPACITY_TOL:
        return unconstrained

    lam_max = max(p.r - p.c_p for p in inst.products)
    lam = bisect_root(
        lambda x: capacity_sum(inst, x) - inst.Q,
        0.0,
        lam_max,
        xtol=LAMBDA_TOL,
        what="capacity shadow price",
    )
    state = lagrange_state(inst, lam)
    logger.debug("Shadow price %.10g fills %.10g of Q=%g", lam, state.total, inst.Q)

    notes: tuple[str, ...] = ()
    if not all(check_igfr(p.demand) for p in inst.products):
        # Grid-searched orders are not continuous in lambda.
        residual = state.total - inst.Q
        notes = (f"grid fallback for non-IGFR demand, capacity residual {residual:.3g}",)
        if abs(residual) > RESIDUAL_TOL:
            logger.warning("Capacity filled to within %.3g only (non-IGFR demand)", residual)
    return allocation_solution(inst, list(state.q), lam, notes=notes)


def solve_adoption_n(inst: Instance) -> EquilibriumSolution:
    total = sum(benchmark_optimum(p.c_p, p).q for p in inst.products)
    if total > inst.Q + CAPACITY_TOL:
        return solve_adopt_capacitated_n(inst)
    return solve_adopt_unconstrained_n(inst)


def equilibrium_n(inst: Instance) -> EquilibriumSolution:
    adopt = solve_adoption_n(inst)
    keep = solve_no_adoption_n(inst)
    if adopt.pi_M > keep.pi_M + PROFIT_TIE_TOL:
        logger.debug("Adoption wins: %.6g > %.6g (%s)", adopt.pi_M, keep.pi_M, adopt.case)
        return adopt
    return keep


def three_product_uniform_closed_form(inst: Instance) -> EquilibriumSolution:
    """Capacity-bound allocation for three uniform products in closed form."""
    if inst.n != 3:
        raise UnsupportedModelError(f"Three-product closed form called with n={inst.n}")
    if not inst.all_uniform:
        raise UnsupportedModelError("Closed forms need uniform demand for every product")

    p1, p2, p3 = inst.products
    U1, U2, U3 = p1.demand.upper, p2.demand.upper, p3.demand.upper
    r1, r2, r3 = p1.r, p2.r, p3.r
    c1, c2, c3 = p1.c_p, p2.c_p, p3.c_p
    Q = inst.Q
    denom = 2 * (U1 * r2 * r3 + U2 * r1 * r3 + U3 * r1 * r2)

    q1 = U1 * (
        2 * Q * r2 * r3
        + U2 * c2 * r3 - U2 * c1 * r3 - U2 * r2 * r3 + U2 * r1 * r3
        - U3 * c1 * r2 + U3 * c3 * r2 + U3 * r1 * r2 - U3 * r2 * r3
    ) / denom
    q2 = U2 * (
        2 * Q * r1 * r3
        + U1 * c1 * r3 - U1 * c2 * r3 - U1 * r1 * r3 + U1 * r2 * r3
        - U3 * c2 * r1 + U3 * c3 * r1 + U3 * r1 * r2 - U3 * r1 * r3
    ) / denom
    q3 = U3 * (
        2 * Q * r1 * r2
        + U1 * c1 * r2 - U1 * c3 * r2 - U1 * r1 * r2 + U1 * r2 * r3
        - U2 * c3 * r1 + U2 * c2 * r1 + U2 * r1 * r3 - U2 * r1 * r2
    ) / denom

    quantities = [q1, q2, q3]
    if any(q < 0 or q > p.demand.upper for q, p in zip(quantities, inst.products)):
        raise DomainError(f"Closed-form allocation {quantities} leaves the interior")
    lam = r1 - 2 * r1 * q1 / U1 - c1
    return allocation_solution(inst, quantities, lam)
