"""Continuous demand distributions on [0, U] and the pieces the solvers need.

Two models are supported: ``UniformDemand`` and ``TabulatedDemand`` (a piecewise-linear
CDF through a list of knots, i.e. a piecewise-constant density). Both are immutable and
hashable so results depending only on the model (the IGFR check) can be memoised.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from printadopt.common.exceptions import ConfigError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_IGFR_GRID = 1024
IGFR_TOL = -1e-12


def _out(value: np.ndarray) -> float | np.ndarray:
    return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class UniformDemand:
    """Demand ~ Uniform[0, upper]."""

    upper: float

    def __post_init__(self) -> None:
        if not self.upper > 0:
            raise ConfigError(f"Uniform demand needs upper > 0, got {self.upper}")

    @property
    def kind(self) -> str:
        return "uniform"

    @property
    def mean(self) -> float:
        return self.upper / 2.0

    def cdf(self, x: ArrayLike) -> float | np.ndarray:
        return _out(np.clip(np.asarray(x, dtype=float) / self.upper, 0.0, 1.0))

    def pdf(self, x: float) -> float:
        _check_support(self, x)
        return 1.0 / self.upper

    def quantile(self, p: ArrayLike) -> float | np.ndarray:
        p_arr = _check_probability(p)
        return _out(p_arr * self.upper)

    def expected_min(self, q: float) -> float:
        """E[min(q, D)] = q - q^2 / 2U on [0, U]."""
        if q < 0:
            raise DomainError(f"Order quantity must be >= 0, got {q}")
        if q >= self.upper:
            return self.upper / 2.0
        return q - q * q / (2.0 * self.upper)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.quantile(rng.random(size))


@dataclass(frozen=True)
class TabulatedDemand:
    """Demand with a piecewise-linear CDF through ``knots`` = ((x, F), ...)."""

    knots: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        knots = tuple((float(x), float(f)) for x, f in self.knots)
        object.__setattr__(self, "knots", knots)
        if len(knots) < 2:
            raise ConfigError("Tabulated demand needs at least two knots")
        xs, fs = self.xs, self.fs
        if xs[0] != 0.0 or fs[0] != 0.0:
            raise ConfigError("First knot must be (0, 0)")
        if fs[-1] != 1.0:
            raise ConfigError("Last knot must have F = 1")
        if np.any(np.diff(xs) <= 0):
            raise ConfigError("Knot abscissae must be strictly increasing")
        if np.any(np.diff(fs) < 0):
            raise ConfigError("Tabulated CDF must be non-decreasing")
        if np.any((fs < 0) | (fs > 1)):
            raise ConfigError("Tabulated CDF values must lie in [0, 1]")

    @property
    def kind(self) -> str:
        return "tabulated"

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([k[0] for k in self.knots])

    @cached_property
    def fs(self) -> np.ndarray:
        return np.array([k[1] for k in self.knots])

    @cached_property
    def upper(self) -> float:
        # First abscissa where the CDF reaches 1: a flat tail carries no mass.
        fs = self.fs
        return float(self.xs[int(np.argmax(fs >= 1.0))])

    @property
    def mean(self) -> float:
        return self.expected_min(self.upper)

    def cdf(self, x: ArrayLike) -> float | np.ndarray:
        return _out(np.interp(np.asarray(x, dtype=float), self.xs, self.fs, left=0.0, right=1.0))

    def pdf(self, x: float) -> float:
        _check_support(self, x)
        xs, fs = self.xs, self.fs
        i = int(np.searchsorted(xs, x, side="right")) - 1
        i = min(max(i, 0), len(xs) - 2)
        return float((fs[i + 1] - fs[i]) / (xs[i + 1] - xs[i]))

    def quantile(self, p: ArrayLike) -> float | np.ndarray:
        p_arr = _check_probability(p)
        xs, fs = self.xs, self.fs
        idx = np.clip(np.searchsorted(fs, p_arr, side="left"), 1, len(xs) - 1)
        f0, f1 = fs[idx - 1], fs[idx]
        x0, x1 = xs[idx - 1], xs[idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            x = x0 + (p_arr - f0) / (f1 - f0) * (x1 - x0)
        return _out(np.where(p_arr <= 0.0, 0.0, x))

    def expected_min(self, q: float) -> float:
        """Exact integral of the survival function, trapezoid by segment."""
        if q < 0:
            raise DomainError(f"Order quantity must be >= 0, got {q}")
        q = min(q, float(self.xs[-1]))
        xs = self.xs
        grid = np.append(xs[xs < q], q)
        survival = 1.0 - np.interp(grid, xs, self.fs)
        return float(np.sum(np.diff(grid) * (survival[:-1] + survival[1:]) / 2.0))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.quantile(rng.random(size))


DemandModel = Union[UniformDemand, TabulatedDemand]


def _check_support(model: DemandModel, x: float) -> None:
    if x < 0 or x > model.upper:
        raise DomainError(f"x={x} outside demand support [0, {model.upper}]")


def _check_probability(p: ArrayLike) -> np.ndarray:
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr < 0.0) | (p_arr > 1.0)):
        raise DomainError(f"Probability outside [0, 1]: {p}")
    return p_arr


def gfr(model: DemandModel, x: float) -> float:
    """Generalized failure rate x f(x) / (1 - F(x)); 0 at x = 0."""
    if x < 0 or x >= model.upper:
        raise DomainError(f"gfr undefined at x={x} (support [0, {model.upper}))")
    if x == 0:
        return 0.0
    return x * model.pdf(x) / (1.0 - model.cdf(x))


@lru_cache(maxsize=256)
def check_igfr(model: DemandModel, grid_points: int = DEFAULT_IGFR_GRID) -> bool:
    """Numerical IGFR test: gfr non-decreasing on a uniform grid over the open support."""
    if grid_points < 3:
        raise DomainError(f"IGFR check needs at least 3 grid points, got {grid_points}")
    xs = np.linspace(0.0, model.upper, grid_points + 2)[1:-1]
    rates = np.array([gfr(model, float(x)) for x in xs])
    ok = bool(np.all(np.diff(rates) >= IGFR_TOL))
    if not ok:
        logger.warning("Demand %s is not IGFR; optimal quantities fall back to grid search", model)
    return ok
