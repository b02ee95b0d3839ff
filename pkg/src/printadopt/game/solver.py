"""Dispatch between the two-product and the general solvers."""

from __future__ import annotations

from printadopt.game.models import EquilibriumSolution, Instance
from printadopt.game.multi_product import equilibrium_n, solve_adoption_n, solve_no_adoption_n
from printadopt.game.two_product import equilibrium_2, solve_adoption_2, solve_no_adoption_2


def equilibrium(inst: Instance) -> EquilibriumSolution:
    return equilibrium_2(inst) if inst.n == 2 else equilibrium_n(inst)


def adoption_branch(inst: Instance) -> EquilibriumSolution:
    """Best v = 1 solution, whether or not it beats traditional manufacturing."""
    return solve_adoption_2(inst) if inst.n == 2 else solve_adoption_n(inst)


def no_adoption_branch(inst: Instance) -> EquilibriumSolution:
    return solve_no_adoption_2(inst) if inst.n == 2 else solve_no_adoption_n(inst)
