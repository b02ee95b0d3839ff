"""Bracketed root finding on top of scipy's bisection."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from scipy.optimize import bisect

from printadopt.common.exceptions import BracketError

QUANTITY_TOL = 1e-10


def bisect_root(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = QUANTITY_TOL,
    what: str = "root",
) -> float:
    """Root of ``fn`` on [lo, hi]; endpoints that are exact zeros are returned as is."""
    f_lo = fn(lo)
    if f_lo == 0.0:
        return lo
    f_hi = fn(hi)
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(what, lo, hi)
    return float(bisect(fn, lo, hi, xtol=xtol, maxiter=500))


def sign_change_brackets(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    points: int = 512,
) -> tuple[list[tuple[float, float]], np.ndarray, np.ndarray]:
    """Scan ``fn`` on a uniform grid and return sub-brackets holding a sign change.

    Also returns the scan grid and values so callers can inspect the boundary signs.
    """
    xs = np.linspace(lo, hi, points + 1)
    values = np.array([fn(float(x)) for x in xs])
    brackets: list[tuple[float, float]] = []
    for i in range(points):
        a, b = values[i], values[i + 1]
        if a == 0.0:
            brackets.append((float(xs[i]), float(xs[i])))
        elif a * b < 0.0:
            brackets.append((float(xs[i]), float(xs[i + 1])))
    if values[-1] == 0.0:
        brackets.append((float(xs[-1]), float(xs[-1])))
    return brackets, xs, values
