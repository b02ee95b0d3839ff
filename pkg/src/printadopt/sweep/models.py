"""Sweep descriptions and per-cell results."""

from __future__ import annotations

from dataclasses import dataclass

from pydantic import BaseModel, Field, ValidationError, model_validator

from printadopt.common.exceptions import ConfigError
from printadopt.game.models import EquilibriumSolution

ERROR_CASE = "error"


class LinkedParam(BaseModel):
    """Parameter set to ``scale`` times the value of the axis it is attached to."""

    param_path: str
    scale: float = 1.0


class SweepSpec(BaseModel):
    param_path: str
    start: float
    stop: float
    steps: int = Field(ge=2)
    linked: list[LinkedParam] = []
    second: SweepSpec | None = None

    @model_validator(mode="after")
    def _check_range(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError(f"sweep range needs start < stop, got [{self.start}, {self.stop}]")
        if self.second is not None and self.second.second is not None:
            raise ValueError("sweeps have at most two dimensions")
        return self

    @property
    def dims(self) -> int:
        return 1 if self.second is None else 2


def make_spec(**kwargs) -> SweepSpec:
    """Build a SweepSpec, reporting invalid input as ConfigError."""
    try:
        return SweepSpec(**kwargs)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "sweep"
        raise ConfigError(f"{where}: {first['msg']}") from e


@dataclass(frozen=True)
class RegionCell:
    coords: tuple[float, ...]
    case: str
    v: int | None = None
    pi_M: float | None = None
    pi_R: float | None = None
    w: tuple[float, ...] = ()
    q: tuple[float, ...] = ()
    shadow_price: float | None = None
    error: str = ""

    @classmethod
    def from_solution(cls, coords: tuple[float, ...], sol: EquilibriumSolution) -> RegionCell:
        return cls(
            coords=coords,
            case=str(sol.case),
            v=sol.v,
            pi_M=sol.pi_M,
            pi_R=sol.pi_R,
            w=sol.w,
            q=sol.q,
            shadow_price=sol.shadow_price,
        )

    @classmethod
    def failed(cls, coords: tuple[float, ...], error: Exception) -> RegionCell:
        return cls(coords=coords, case=ERROR_CASE, error=str(error))

    @property
    def is_error(self) -> bool:
        return self.case == ERROR_CASE
