"""Read and replace numeric instance fields addressed by a path.

Paths: ``K``, ``Q``, ``products[i].r``, ``products[i].c_m``, ``products[i].c_p``,
``products[i].demand.upper`` (uniform demand only).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from printadopt.common.exceptions import ConfigError
from printadopt.game.demand import UniformDemand
from printadopt.game.models import Instance

_PATH_RE = re.compile(r"^(?:(?P<top>K|Q)|products\[(?P<index>\d+)\]\.(?P<field>r|c_m|c_p|demand\.upper))$")


@dataclass(frozen=True)
class ParamPath:
    raw: str
    top: str | None = None
    index: int | None = None
    field: str | None = None


def parse_path(path: str) -> ParamPath:
    m = _PATH_RE.match(path.strip())
    if not m:
        raise ConfigError(
            f"Unknown parameter path '{path}' "
            "(expected K, Q, products[i].r|c_m|c_p or products[i].demand.upper)"
        )
    index = m.group("index")
    return ParamPath(
        raw=path,
        top=m.group("top"),
        index=int(index) if index is not None else None,
        field=m.group("field"),
    )


def get_param(inst: Instance, path: str) -> float:
    p = parse_path(path)
    if p.top:
        return float(getattr(inst, p.top))
    product = inst.products[_check_index(inst, p)]
    if p.field == "demand.upper":
        return float(product.demand.upper)
    return float(getattr(product, p.field))


def set_param(inst: Instance, path: str, value: float) -> Instance:
    """Copy of ``inst`` with one field replaced; invariants are re-checked."""
    p = parse_path(path)
    if p.top:
        return replace(inst, **{p.top: float(value)})

    i = _check_index(inst, p)
    product = inst.products[i]
    if p.field == "demand.upper":
        if not isinstance(product.demand, UniformDemand):
            raise ConfigError(f"{path}: only uniform demand has a sweepable upper bound")
        product = replace(product, demand=UniformDemand(upper=float(value)))
    else:
        product = replace(product, **{p.field: float(value)})
    products = inst.products[:i] + (product,) + inst.products[i + 1:]
    return replace(inst, products=products)


def apply_params(inst: Instance, assignments: dict[str, float]) -> Instance:
    for path, value in assignments.items():
        inst = set_param(inst, path, value)
    return inst


def _check_index(inst: Instance, p: ParamPath) -> int:
    if p.index >= inst.n:
        raise ConfigError(f"{p.raw}: product index {p.index} out of range (n={inst.n})")
    return p.index
