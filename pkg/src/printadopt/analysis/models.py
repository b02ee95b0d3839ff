"""Pydantic models for verification results."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class MonteCarloEstimate(BaseModel):
    mean: float = 0.0
    stderr: float = Field(default=0.0, ge=0.0)
    samples: int = 0


class VerificationReport(BaseModel):
    analytic_pi: float
    oracle_pi: float
    abs_gap: float = 0.0
    analytic_pi_R: float = 0.0
    analytic_case: str = ""  # CapacityBound|Unconstrained|NoAdoption
    oracle_case: str = ""
    mc_mean: float = 0.0
    mc_stderr: float = Field(default=0.0, ge=0.0)
    mc_consistent: bool = True
    soc_ok: bool = True
    grid_n: int = 0
    samples: int = 0
    seed: int = 0
    elapsed_ms: int = 0
    notes: list[str] = []

    @model_validator(mode="after")
    def _fill_gap(self) -> "VerificationReport":
        self.abs_gap = abs(self.analytic_pi - self.oracle_pi)
        return self

    @property
    def mc_z(self) -> float:
        """Distance of the analytic retailer profit from the MC mean, in standard errors."""
        if self.mc_stderr == 0:
            return 0.0 if self.mc_mean == self.analytic_pi_R else float("inf")
        return abs(self.mc_mean - self.analytic_pi_R) / self.mc_stderr
