"""Pydantic models for configuration validation."""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, Field


# --- Instance files ---

class UniformDemandConfig(BaseModel):
    kind: Literal["uniform"] = "uniform"
    upper: float


class TabulatedDemandConfig(BaseModel):
    kind: Literal["tabulated"] = "tabulated"
    knots: list[tuple[float, float]]


DemandConfig = Annotated[
    Union[UniformDemandConfig, TabulatedDemandConfig],
    Field(discriminator="kind"),
]


class ProductConfig(BaseModel):
    name: str = ""
    r: float
    c_m: float
    c_p: float
    demand: DemandConfig


class InstanceConfig(BaseModel):
    name: str = ""
    description: str = ""
    K: float = 0.0
    Q: float = 0.0
    products: list[ProductConfig] = Field(min_length=1)


# --- Application settings ---

class OracleSettings(BaseModel):
    grid_n: int = Field(default=400, ge=10)
    mc_samples: int = Field(default=1_000_000, ge=1000)
    mc_batch_size: int = Field(default=100_000, ge=1)
    seed: int = 0


class SweepSettings(BaseModel):
    workers: int = Field(default=1, ge=1)
    boundary_tol: float = Field(default=1e-6, gt=0)


class LoggingSettings(BaseModel):
    level: str = "INFO"


class AppSettings(BaseModel):
    oracle: OracleSettings = OracleSettings()
    sweep: SweepSettings = SweepSettings()
    logging: LoggingSettings = LoggingSettings()
