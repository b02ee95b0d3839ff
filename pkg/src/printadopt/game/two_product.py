"""Two-product game: no adoption, unconstrained adoption, capacity-bound adoption.

Under capacity-bound adoption the manufacturer's problem reduces to one variable
q1 with q2 = Q - q1. Its stationarity condition

    g1(q1) - c_p1 = g2(Q - q1) - c_p2,   g(q) = r (1 - F(q)) - r q f(q)

is solved by bracketed bisection on [max(0, Q - U2), min(Q, U1)].
"""

from __future__ import annotations

import logging

from printadopt.common.exceptions import DomainError, UnsupportedModelError
from printadopt.common.rootfind import QUANTITY_TOL, bisect_root, sign_change_brackets
from printadopt.game.market import (
    allocation_solution,
    benchmark_optimum,
    empty_capacity_solution,
    independent_solution,
    marginal_revenue,
    wholesale_for_quantity,
)
from printadopt.game.models import Case, EquilibriumSolution, Instance

logger = logging.getLogger(__name__)

PROFIT_TIE_TOL = 1e-9
CAPACITY_TOL = 1e-9
SCAN_POINTS = 512


def solve_no_adoption_2(inst: Instance) -> EquilibriumSolution:
    _require_two(inst)
    return independent_solution(inst, adopt=False)


def solve_adopt_unconstrained_2(inst: Instance) -> EquilibriumSolution:
    """Adoption ignoring capacity; callers decide whether Q binds."""
    _require_two(inst)
    return independent_solution(inst, adopt=True)


def capacitated_objective_2(inst: Instance, q1: float) -> float:
    """Manufacturer profit with q2 = Q - q1 and wholesale prices inverted from q."""
    _require_two(inst)
    p1, p2 = inst.products
    q2 = inst.Q - q1
    w1 = wholesale_for_quantity(q1, p1)
    w2 = wholesale_for_quantity(q2, p2)
    return (w1 - p1.c_p) * q1 + (w2 - p2.c_p) * q2 - inst.K


def solve_adopt_capacitated_2(inst: Instance) -> EquilibriumSolution:
    _require_two(inst)
    if inst.Q == 0:
        return empty_capacity_solution(inst)

    unconstrained = solve_adopt_unconstrained_2(inst)
    if unconstrained.total_quantity <= inst.Q + CAPACITY_TOL:
        return unconstrained

    p1, p2 = inst.products
    Q = inst.Q
    lo = max(0.0, Q - p2.demand.upper)
    hi = min(Q, p1.demand.upper)

    def slope(q1: float) -> float:
        return (marginal_revenue(q1, p1) - p1.c_p) - (marginal_revenue(Q - q1, p2) - p2.c_p)

    corner = False
    if hi - lo <= QUANTITY_TOL:
        q1 = lo
    else:
        brackets, _, values = sign_change_brackets(slope, lo, hi, SCAN_POINTS)
        if brackets:
            roots = [a if a == b else bisect_root(slope, a, b, what="capacity split") for a, b in brackets]
            q1 = max(roots, key=lambda x: capacitated_objective_2(inst, x))
            if len(roots) > 1:
                logger.debug("Capacity split has %d stationary points, kept q1=%.6g", len(roots), q1)
        else:
            q1 = lo if values[0] < 0 else hi
            corner = True
            logger.debug("No interior capacity split, corner q1=%.6g", q1)

    q2 = max(0.0, Q - q1)
    active = p1 if q1 > 0 else p2
    lam = marginal_revenue(q1 if q1 > 0 else q2, active) - active.c_p
    return allocation_solution(inst, [q1, q2], lam, corner=corner)


def solve_adoption_2(inst: Instance) -> EquilibriumSolution:
    """Adoption branch: capacity-bound iff the unconstrained orders exceed Q."""
    _require_two(inst)
    total = sum(benchmark_optimum(p.c_p, p).q for p in inst.products)
    if total > inst.Q + CAPACITY_TOL:
        return solve_adopt_capacitated_2(inst)
    return solve_adopt_unconstrained_2(inst)


def equilibrium_2(inst: Instance) -> EquilibriumSolution:
    """Adopt only when it strictly beats traditional manufacturing; ties keep v = 0."""
    adopt = solve_adoption_2(inst)
    keep = solve_no_adoption_2(inst)
    if adopt.pi_M > keep.pi_M + PROFIT_TIE_TOL:
        logger.debug("Adoption wins: %.6g > %.6g (%s)", adopt.pi_M, keep.pi_M, adopt.case)
        return adopt
    return keep


def uniform_closed_form_2(inst: Instance, case: Case | str) -> EquilibriumSolution:
    """Closed-form equilibrium for two uniform products in the requested regime."""
    _require_uniform_two(inst)
    case = Case(case)
    if case is not Case.CAPACITY_BOUND:
        return uniform_independent_closed_form(inst, case)

    p1, p2 = inst.products
    U1, U2 = p1.demand.upper, p2.demand.upper
    Q, r1, r2, c1, c2 = inst.Q, p1.r, p2.r, p1.c_p, p2.c_p
    denom = 2.0 * (U1 * r2 + U2 * r1)
    q1 = U1 * (2 * Q * r2 - U2 * c1 + U2 * c2 + U2 * r1 - U2 * r2) / denom
    lo, hi = max(0.0, Q - U2), min(Q, U1)
    corner = not lo <= q1 <= hi
    if corner:
        q1 = min(max(q1, lo), hi)
        q2 = Q - q1
    else:
        q2 = ((c1 - c2 - r1 + r2) * U1 + 2 * r1 * Q) * U2 / denom
    ws = [r1 * (1 - q1 / U1), r2 * (1 - q2 / U2)]
    profit = (ws[0] - c1) * q1 + (ws[1] - c2) * q2 - inst.K
    if q1 > 0:
        lam = r1 - 2 * r1 * q1 / U1 - c1
    else:
        lam = r2 - 2 * r2 * q2 / U2 - c2
    return EquilibriumSolution(
        v=1,
        w=tuple(ws),
        q=(q1, q2),
        case=Case.CAPACITY_BOUND,
        pi_M=profit,
        pi_R=_uniform_retailer(inst, [q1, q2]),
        shadow_price=max(0.0, lam),
        corner=corner,
    )


def uniform_independent_closed_form(inst: Instance, case: Case | str) -> EquilibriumSolution:
    """Closed form for any number of uniform products when capacity does not bind."""
    case = Case(case)
    if case is Case.CAPACITY_BOUND:
        raise DomainError("Capacity-bound allocations have no per-product closed form")
    if not inst.all_uniform:
        raise UnsupportedModelError("Closed forms need uniform demand for every product")

    adopt = case is Case.UNCONSTRAINED
    costs = [p.c_p if adopt else p.c_m for p in inst.products]
    qs = [_uniform_half(p.demand.upper, p.r, c) for p, c in zip(inst.products, costs)]
    ws = [(p.r + min(c, p.r)) / 2.0 for p, c in zip(inst.products, costs)]
    profit = sum(_uniform_profit(p.demand.upper, p.r, c) for p, c in zip(inst.products, costs))
    return EquilibriumSolution(
        v=int(adopt),
        w=tuple(ws),
        q=tuple(qs),
        case=case,
        pi_M=profit - inst.K if adopt else profit,
        pi_R=_uniform_retailer(inst, qs),
    )


def capacity_gap(inst: Instance) -> float:
    """Profit lost to the capacity constraint, pi_unconstrained - pi_capacity_bound."""
    free = uniform_closed_form_2(inst, Case.UNCONSTRAINED)
    bound = uniform_closed_form_2(inst, Case.CAPACITY_BOUND)
    return free.pi_M - bound.pi_M


def capacity_gap_squared_form(inst: Instance) -> float:
    """The same gap written as a single square over a positive denominator."""
    _require_uniform_two(inst)
    p1, p2 = inst.products
    U1, U2 = p1.demand.upper, p2.demand.upper
    r1, r2, c1, c2 = p1.r, p2.r, p1.c_p, p2.c_p
    inner = ((inst.Q - U1 / 2 - U2 / 2) * r2 + U2 * c2 / 2) * r1 + U1 * c1 * r2 / 2
    return inner**2 / ((U1 * r2 + U2 * r1) * r1 * r2)


def adoption_capital_threshold(inst: Instance) -> float:
    """Largest K for which unconstrained adoption beats traditional manufacturing.

    Works for any number of uniform products; negative means never adopt.
    """
    if not inst.all_uniform:
        raise UnsupportedModelError("Adoption threshold needs uniform demand for every product")
    return sum(
        _uniform_profit(p.demand.upper, p.r, p.c_p) - _uniform_profit(p.demand.upper, p.r, p.c_m)
        for p in inst.products
    )


def _uniform_half(U: float, r: float, c: float) -> float:
    return U / 2.0 * max(0.0, 1.0 - c / r)


def _uniform_profit(U: float, r: float, c: float) -> float:
    return U * max(0.0, r - c) ** 2 / (4.0 * r)


def _uniform_retailer(inst: Instance, qs: list[float]) -> float:
    return sum(p.r * q * q / (2.0 * p.demand.upper) for p, q in zip(inst.products, qs))


def _require_two(inst: Instance) -> None:
    if inst.n != 2:
        raise DomainError(f"Two-product solver called with n={inst.n}")


def _require_uniform_two(inst: Instance) -> None:
    if inst.n != 2:
        raise UnsupportedModelError(f"Two-product closed form called with n={inst.n}")
    if not inst.all_uniform:
        raise UnsupportedModelError("Closed forms need uniform demand for both products")
