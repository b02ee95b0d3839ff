"""n-product solver: shadow-price bisection and three-product closed forms."""

from __future__ import annotations

import numpy as np
import pytest

from printadopt.common.exceptions import DomainError, UnsupportedModelError
from printadopt.game.market import benchmark_optimum, marginal_revenue
from printadopt.game.models import Case, Instance, Product
from printadopt.game.multi_product import (
    capacity_sum,
    equilibrium_n,
    foc_quantity,
    solve_adopt_capacitated_n,
    solve_adopt_unconstrained_n,
    solve_adoption_n,
    solve_no_adoption_n,
    three_product_uniform_closed_form,
)
from printadopt.game.solver import equilibrium
from printadopt.game.two_product import (
    equilibrium_2,
    solve_adopt_capacitated_2,
    solve_no_adoption_2,
)
from tests.conftest import (
    priced_instance,
    random_uniform_instance,
    small_instance,
    three_product_instance,
    uniform_product,
)

TIGHT = dict(rel=1e-8, abs=1e-7)


class TestFocQuantity:
    def test_zero_shadow_price_is_unconstrained_order(self):
        p = uniform_product(150.0, 45.0, 20.0, 200.0)
        assert foc_quantity(p, 0.0) == pytest.approx(benchmark_optimum(20.0, p).q)

    def test_price_exhausted(self):
        p = uniform_product(150.0, 45.0, 20.0, 200.0)
        assert foc_quantity(p, 130.0) == 0.0

    def test_uniform_value(self):
        p = uniform_product(150.0, 45.0, 20.0, 200.0)
        assert foc_quantity(p, 1.0) == pytest.approx(86.0, abs=1e-9)

    def test_negative_shadow_price(self):
        with pytest.raises(DomainError):
            foc_quantity(uniform_product(150.0, 45.0, 20.0, 200.0), -0.5)

    def test_capacity_sum_is_monotone(self):
        inst = three_product_instance()
        lams = np.linspace(0.0, 140.0, 100)
        sums = [capacity_sum(inst, float(x)) for x in lams]
        assert all(b <= a + 1e-12 for a, b in zip(sums, sums[1:]))
        assert sums[-1] == 0.0


class TestNoAdoption:
    def test_matches_two_product(self):
        inst = priced_instance()
        assert solve_no_adoption_n(inst) == solve_no_adoption_2(inst)

    def test_three_products(self):
        assert solve_no_adoption_n(three_product_instance()).pi_M == pytest.approx(6125.0)

    def test_no_margin(self):
        inst = Instance(
            products=tuple(uniform_product(r, r, 5.0, 50.0) for r in (10.0, 20.0, 30.0)),
            K=0.0,
            Q=10.0,
        )
        assert solve_no_adoption_n(inst).pi_M == 0.0


class TestUnconstrainedAdoption:
    def test_three_products(self):
        sol = solve_adopt_unconstrained_n(three_product_instance())
        assert sol.q == pytest.approx((34.0, 51.75, 86.0 + 2.0 / 3.0))

    def test_fixed_cost_only_shifts_profit(self):
        a = solve_adopt_unconstrained_n(three_product_instance(K=0.0))
        b = solve_adopt_unconstrained_n(three_product_instance(K=250.0))
        assert a.q == b.q and a.w == b.w
        assert a.pi_M - b.pi_M == pytest.approx(250.0)

    def test_single_product(self):
        p = uniform_product(50.0, 15.0, 10.0, 100.0)
        sol = solve_adopt_unconstrained_n(Instance(products=(p,), K=30.0, Q=1000.0))
        opt = benchmark_optimum(10.0, p)
        assert sol.q == (opt.q,)
        assert sol.pi_M == pytest.approx(opt.profit - 30.0)


class TestCapacitatedAdoption:
    def test_three_products(self):
        sol = solve_adopt_capacitated_n(three_product_instance())
        assert sol.shadow_price == pytest.approx(1.0, abs=1e-6)
        assert sol.q == pytest.approx((33.0, 51.0, 86.0), abs=1e-6)
        assert sum(sol.q) == pytest.approx(170.0, abs=1e-8)
        assert sol.case is Case.CAPACITY_BOUND

    def test_matches_two_product_solver(self, rng):
        for _ in range(50):
            inst = random_uniform_instance(rng, binding=True)
            a = solve_adopt_capacitated_n(inst)
            b = solve_adopt_capacitated_2(inst)
            assert a.q == pytest.approx(b.q, abs=1e-7)
            assert a.w == pytest.approx(b.w, **TIGHT)
            assert a.pi_M == pytest.approx(b.pi_M, **TIGHT)

    def test_symmetric_products(self):
        p = uniform_product(40.0, 12.0, 8.0, 60.0)
        for n in (2, 3, 5):
            sol = solve_adopt_capacitated_n(Instance(products=(p,) * n, K=0.0, Q=30.0))
            assert sol.q == pytest.approx((30.0 / n,) * n, abs=1e-8)

    def test_slack_capacity_returns_unconstrained(self):
        inst = three_product_instance(c_p3=20.0)
        total = sum(solve_adopt_unconstrained_n(inst).q)
        sol = solve_adopt_capacitated_n(three_product_instance(c_p3=20.0, Q=total))
        assert sol.q == pytest.approx(solve_adopt_unconstrained_n(inst).q)
        assert sol.shadow_price == 0.0

    def test_zero_capacity(self):
        sol = solve_adopt_capacitated_n(three_product_instance(Q=0.0, K=12.0))
        assert sol.q == (0.0, 0.0, 0.0)
        assert sol.pi_M == -12.0

    def test_shadow_price_consistency(self, rng):
        for _ in range(30):
            inst = random_uniform_instance(rng, n=3, binding=True)
            sol = solve_adopt_capacitated_n(inst)
            for q, p in zip(sol.q, inst.products):
                if q > 1e-6:
                    margin = marginal_revenue(q, p) - p.c_p
                    assert margin == pytest.approx(sol.shadow_price, abs=1e-6)

    def test_per_product_curvature(self):
        inst = three_product_instance()
        sol = solve_adopt_capacitated_n(inst)
        for q, p in zip(sol.q, inst.products):
            assert -2.0 * p.r * p.demand.pdf(q) < 0

    def test_unconstrained_dominates(self, rng):
        for _ in range(100):
            inst = random_uniform_instance(rng, n=3, binding=True)
            assert solve_adopt_unconstrained_n(inst).pi_M >= solve_adopt_capacitated_n(inst).pi_M - 1e-9

    def test_grid_fallback_is_flagged(self, non_igfr_demand):
        products = (
            Product(r=50.0, c_m=15.0, c_p=10.0, demand=non_igfr_demand),
            uniform_product(50.0, 15.0, 10.0, 100.0),
            uniform_product(50.0, 15.0, 10.0, 100.0),
        )
        sol = solve_adopt_capacitated_n(Instance(products=products, K=0.0, Q=60.0))
        assert sol.case is Case.CAPACITY_BOUND
        assert len(sol.notes) == 1
        assert sol.notes[0].startswith("grid fallback for non-IGFR demand")
        # the tabulated order sits on its first segment, past the jump from q = 90
        assert sol.q[0] < 10.0
        assert sol.total_quantity == pytest.approx(60.0, abs=1e-5)

    def test_igfr_solutions_carry_no_notes(self):
        assert solve_adopt_capacitated_n(three_product_instance()).notes == ()


class TestEquilibrium:
    @pytest.mark.parametrize(
        "c_p3, expected",
        [(20.0, Case.CAPACITY_BOUND), (30.0, Case.UNCONSTRAINED), (46.0, Case.NO_ADOPTION)],
    )
    def test_three_product_regimes(self, c_p3, expected):
        assert equilibrium_n(three_product_instance(c_p3=c_p3)).case is expected

    def test_three_product_capacity_bound_profit(self):
        sol = equilibrium_n(three_product_instance(c_p3=20.0))
        assert sol.pi_M == pytest.approx(7995.5, abs=1e-5)

    def test_two_products_agree_with_fast_path(self, rng):
        for _ in range(50):
            inst = random_uniform_instance(rng)
            a, b = equilibrium_n(inst), equilibrium_2(inst)
            assert a.case == b.case
            assert a.q == pytest.approx(b.q, abs=1e-7)
            assert a.pi_M == pytest.approx(b.pi_M, **TIGHT)

    def test_known_two_product_cases(self):
        for c_p2, case in ((5.0, Case.CAPACITY_BOUND), (11.0, Case.UNCONSTRAINED), (18.0, Case.NO_ADOPTION)):
            assert equilibrium_n(small_instance(c_p2=c_p2)).case is case

    def test_dispatcher(self):
        assert equilibrium(three_product_instance()) == equilibrium_n(three_product_instance())

    def test_third_product_makes_printing_pay(self):
        pair = priced_instance(c_p=(16.0, 31.0), K=0.0, Q=170.0)
        assert equilibrium(pair).case is Case.NO_ADOPTION
        trio = Instance(
            products=pair.products + (uniform_product(150.0, 45.0, 40.0, 200.0),),
            K=0.0,
            Q=170.0,
        )
        assert equilibrium(trio).v == 1
        assert solve_adoption_n(trio).pi_M > solve_no_adoption_n(trio).pi_M


class TestThreeProductClosedForm:
    def test_matches_shadow_price_solver(self):
        inst = three_product_instance()
        closed = three_product_uniform_closed_form(inst)
        solved = solve_adopt_capacitated_n(inst)
        assert closed.q[0] == pytest.approx(33.0, abs=1e-9)
        assert closed.q == pytest.approx(solved.q, abs=1e-6)
        assert closed.shadow_price == pytest.approx(1.0, abs=1e-9)

    def test_symmetric(self):
        p = uniform_product(40.0, 12.0, 8.0, 60.0)
        closed = three_product_uniform_closed_form(Instance(products=(p,) * 3, K=0.0, Q=30.0))
        assert closed.q == pytest.approx((10.0, 10.0, 10.0))

    def test_proportional_to_demand_scale(self):
        products = tuple(uniform_product(100.0, 30.0, 20.0, u) for u in (50.0, 100.0, 150.0))
        closed = three_product_uniform_closed_form(Instance(products=products, K=0.0, Q=60.0))
        assert closed.q == pytest.approx((10.0, 20.0, 30.0))

    def test_requires_three_uniform_products(self):
        with pytest.raises(UnsupportedModelError):
            three_product_uniform_closed_form(priced_instance())
