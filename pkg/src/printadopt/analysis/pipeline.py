"""Verification pipeline: analytic equilibrium + grid oracle + Monte-Carlo + SOC audit."""

from __future__ import annotations

import logging
import time

import numpy as np

from printadopt.analysis.models import MonteCarloEstimate, VerificationReport
from printadopt.analysis.oracle import grid_equilibrium, mc_retailer_profit, soc_audit
from printadopt.config.models import OracleSettings
from printadopt.game.models import EquilibriumSolution, Instance
from printadopt.game.solver import equilibrium

logger = logging.getLogger(__name__)

MC_SIGMAS = 3.0


class VerificationPipeline:
    """Checks one instance's analytic equilibrium against the independent oracles."""

    def __init__(self, settings: OracleSettings | None = None):
        self._settings = settings or OracleSettings()

    def run(
        self,
        inst: Instance,
        grid_n: int | None = None,
        samples: int | None = None,
        seed: int | None = None,
    ) -> VerificationReport:
        grid_n = grid_n or self._settings.grid_n
        samples = samples or self._settings.mc_samples
        seed = self._settings.seed if seed is None else seed
        start = time.monotonic()

        # Step 1: analytic equilibrium
        analytic = equilibrium(inst)
        logger.debug("Analytic: %s pi_M=%.6g q=%s", analytic.case, analytic.pi_M, analytic.q)

        # Step 2: brute-force grid
        oracle = grid_equilibrium(inst, grid_n=grid_n, seed=seed)
        logger.debug("Grid: %s pi_M=%.6g q=%s", oracle.case, oracle.pi_M, oracle.q)

        # Step 3: retailer profit by simulation
        mc = self.simulate_retailer(inst, analytic, samples, seed)

        # Step 4: second-order conditions
        soc_ok = soc_audit(inst, analytic) if analytic.v else True

        notes: list[str] = list(analytic.notes)
        if analytic.corner:
            notes.append("capacity allocation projected onto a corner")
        if oracle.pi_M > analytic.pi_M + 1e-9:
            notes.append(f"grid beats analytic by {oracle.pi_M - analytic.pi_M:.3g}")
        if analytic.case != oracle.case:
            notes.append(f"case labels differ: analytic {analytic.case}, grid {oracle.case}")
        mc_consistent = abs(mc.mean - analytic.pi_R) <= MC_SIGMAS * mc.stderr + 1e-9
        if not mc_consistent:
            notes.append("analytic retailer profit outside 3 standard errors")

        elapsed_ms = int((time.monotonic() - start) * 1000)
        report = VerificationReport(
            analytic_pi=analytic.pi_M,
            oracle_pi=oracle.pi_M,
            analytic_pi_R=analytic.pi_R,
            analytic_case=str(analytic.case),
            oracle_case=str(oracle.case),
            mc_mean=mc.mean,
            mc_stderr=mc.stderr,
            mc_consistent=mc_consistent,
            soc_ok=soc_ok,
            grid_n=grid_n,
            samples=samples,
            seed=seed,
            elapsed_ms=elapsed_ms,
            notes=notes,
        )
        logger.info(
            "Verified %d-product instance: gap=%.3g soc=%s mc_z=%.2f (%d ms)",
            inst.n, report.abs_gap, soc_ok, report.mc_z, elapsed_ms,
        )
        return report

    def simulate_retailer(
        self,
        inst: Instance,
        sol: EquilibriumSolution,
        samples: int,
        seed: int,
    ) -> MonteCarloEstimate:
        """Total retailer profit by simulation; products use independent child streams."""
        streams = np.random.SeedSequence(seed).spawn(inst.n)
        mean, variance = 0.0, 0.0
        for q, w, product, stream in zip(sol.q, sol.w, inst.products, streams):
            m, se = mc_retailer_profit(
                q, w, product, samples, seed=stream, batch_size=self._settings.mc_batch_size
            )
            mean += m
            variance += se * se
        return MonteCarloEstimate(mean=mean, stderr=float(np.sqrt(variance)), samples=samples)


def verify(inst: Instance, grid_n: int = 400, samples: int = 1_000_000, seed: int = 0) -> VerificationReport:
    return VerificationPipeline().run(inst, grid_n=grid_n, samples=samples, seed=seed)
