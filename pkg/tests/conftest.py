"""Shared instance builders and fixtures."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from printadopt.game.demand import TabulatedDemand, UniformDemand
from printadopt.game.market import benchmark_optimum
from printadopt.game.models import Instance, Product

INSTANCES_DIR = Path(__file__).parent.parent / "config" / "instances"

# IGFR fails: the failure rate drops sharply at x = 10.
NON_IGFR_KNOTS = ((0.0, 0.0), (10.0, 0.5), (90.0, 0.6), (100.0, 1.0))
IGFR_KNOTS = ((0.0, 0.0), (50.0, 0.4), (100.0, 1.0))


def uniform_product(r: float, c_m: float, c_p: float, upper: float, name: str = "") -> Product:
    return Product(r=r, c_m=c_m, c_p=c_p, demand=UniformDemand(upper), name=name)


def small_instance(c_p2: float = 5.0, K: float = 10.0, Q: float = 8.0) -> Instance:
    """U=(10, 15), c_m=(5, 10), c_p1=1, r=(10, 20)."""
    return Instance(
        products=(
            uniform_product(10.0, 5.0, 1.0, 10.0),
            uniform_product(20.0, 10.0, c_p2, 15.0),
        ),
        K=K,
        Q=Q,
    )


def priced_instance(c_p: tuple[float, float] = (10.0, 20.0), K: float = 400.0, Q: float = 100.0,
                    upper: tuple[float, float] = (100.0, 150.0)) -> Instance:
    """r=(50, 100), c_m=(15, 30)."""
    return Instance(
        products=(
            uniform_product(50.0, 15.0, c_p[0], upper[0]),
            uniform_product(100.0, 30.0, c_p[1], upper[1]),
        ),
        K=K,
        Q=Q,
    )


def three_product_instance(c_p3: float = 20.0, Q: float = 170.0, K: float = 0.0) -> Instance:
    return Instance(
        products=(
            uniform_product(50.0, 15.0, 16.0, 100.0),
            uniform_product(100.0, 30.0, 31.0, 150.0),
            uniform_product(150.0, 45.0, c_p3, 200.0),
        ),
        K=K,
        Q=Q,
    )


def random_uniform_instance(
    rng: np.random.Generator,
    n: int = 2,
    binding: bool | None = None,
) -> Instance:
    """Random uniform-demand instance; ``binding`` pins Q below/above the unconstrained orders."""
    products = []
    for _ in range(n):
        r = float(rng.uniform(10.0, 100.0))
        products.append(
            uniform_product(
                r=r,
                c_m=float(rng.uniform(0.1, 0.8)) * r,
                c_p=float(rng.uniform(0.05, 0.8)) * r,
                upper=float(rng.uniform(10.0, 200.0)),
            )
        )
    total = sum(benchmark_optimum(p.c_p, p).q for p in products)
    if binding is True:
        Q = total * float(rng.uniform(0.3, 0.95))
    elif binding is False:
        Q = total * float(rng.uniform(1.05, 2.0))
    else:
        Q = total * float(rng.uniform(0.3, 1.5))
    return Instance(products=tuple(products), K=float(rng.uniform(0.0, 200.0)), Q=Q)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def non_igfr_demand() -> TabulatedDemand:
    return TabulatedDemand(NON_IGFR_KNOTS)


@pytest.fixture
def igfr_demand() -> TabulatedDemand:
    return TabulatedDemand(IGFR_KNOTS)
