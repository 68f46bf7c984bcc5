"""Seeded randomized verification binding solvers, oracle, and simulator.

Each suite draws reproducible instances, checks an independent identity on
every one, and reports a pass count; a failure carries the first offending
instance in its detail string.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import analysis, centralized, oracle, sim
from .channel import ChannelGains, SymmetricChannel, phi
from .oracle import GridSpec
from .symmetric import sum_rate_partial_I


@dataclass
class SuiteResult:
    name: str
    passed: int
    failed: int
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def random_gains(rng: np.random.Generator, dominant: bool) -> ChannelGains:
    """A random instance with path gains in [0.1, 2] and peak SNRs in
    (0, 10].  ``dominant`` forces each direct gain above its cross gain."""
    g11, g22 = rng.uniform(0.1, 2.0, 2)
    if dominant:
        g12 = g11 * rng.uniform(0.05, 0.95)
        g21 = g22 * rng.uniform(0.05, 0.95)
    else:
        g12, g21 = rng.uniform(0.1, 2.0, 2)
    gamma1, gamma2 = rng.uniform(0.05, 10.0, 2)
    return ChannelGains(g11=g11, g12=g12, g21=g21, g22=g22,
                        gamma1_max=gamma1, gamma2_max=gamma2)


def random_symmetric(rng: np.random.Generator, gamma_range=(0.1, 20.0),
                     ordered: bool = True) -> SymmetricChannel:
    a, b = rng.uniform(0.02, 0.98, 2)
    eps, mu = (min(a, b), max(a, b)) if ordered else (a, b)
    gamma = rng.uniform(*gamma_range)
    return SymmetricChannel(epsilon=eps, mu=mu, gamma=gamma)


def suite_solver_vs_oracle(seed: int, instances: int, grid_points: int = 201) -> SuiteResult:
    """Closed-form global optimum against exhaustive grid search, half the
    instances with dominant direct links and half unconstrained.  The solver
    must dominate the grid (its candidate set provably contains the optimum)
    and the grid must come within the grid-resolution slope bound of it; all
    four sub-solver allocations must be feasible to 1e-12."""
    rng = np.random.default_rng(seed)
    spec = GridSpec(n_points=grid_points)
    result = SuiteResult("solver-vs-oracle", 0, 0)
    for k in range(instances):
        gains = random_gains(rng, dominant=(k % 2 == 0))
        best = centralized.solve_global(gains)
        grid_best = oracle.grid_optimize_global(gains, spec)
        tol = oracle.lipschitz_tolerance(gains, spec)
        feasible = all(
            centralized.allocation_violation(gains, alloc) <= 1e-12
            for alloc in (
                centralized.solve_no_sic(gains),
                centralized.solve_partial_sic(gains, 1),
                centralized.solve_partial_sic(gains, 2),
                centralized.solve_full_sic(gains),
            )
        )
        ok = (
            best.sum_rate >= grid_best.sum_rate - 1e-9
            and grid_best.sum_rate >= best.sum_rate - tol
            and feasible
        )
        if ok:
            result.passed += 1
        else:
            result.failed += 1
            if len(result.details) < 3:
                result.details.append(
                    f"instance {k}: solver={best.sum_rate!r} grid={grid_best.sum_rate!r} "
                    f"tol={tol!r} feasible={feasible} gains={gains}"
                )
    return result


def suite_theorem_vs_sim(seed: int, instances: int, dt: float = 1e-3,
                         tol_factor: float = 5.0) -> SuiteResult:
    """Closed-form expected sum rate against the simulated period average,
    within tol_factor * dt * (top rate)."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("theorem-vs-sim", 0, 0)
    for k in range(instances):
        sym = random_symmetric(rng)
        cfg = sim.SimConfig(sym=sym, period=1.0, dt=dt, n_periods=2, include_init=False)
        avg = oracle.time_average(sim.simulate(cfg), window=1)
        e_sum = analysis.expected_rates(sym).e_sum
        tol = tol_factor * dt * phi(sym.gamma)
        if abs(e_sum - avg) <= tol:
            result.passed += 1
        else:
            result.failed += 1
            if len(result.details) < 3:
                result.details.append(
                    f"instance {k}: closed={e_sum!r} sim={avg!r} tol={tol!r} sym={sym}"
                )
    return result


def suite_propositions(seed: int, instances: int) -> SuiteResult:
    """Structural claims on random instances: dominant links make
    no-cancellation at least as good as full cancellation with both budgets
    spent; vanishing SNR makes no-cancellation globally optimal; large SNR
    pushes the optimum within the single-transmitter gap bound."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("propositions", 0, 0)
    for k in range(instances):
        gains = random_gains(rng, dominant=True)
        ok = centralized.check_proposition1(gains)

        thr1 = (gains.g11 - gains.g12) / (gains.g21 * gains.g12)
        thr2 = (gains.g22 - gains.g21) / (gains.g12 * gains.g21)
        quiet = ChannelGains(
            g11=gains.g11, g12=gains.g12, g21=gains.g21, g22=gains.g22,
            gamma1_max=0.01 * min(thr1, thr2), gamma2_max=0.01 * min(thr1, thr2),
        )
        cond = centralized.check_proposition2_conditions(
            quiet, quiet.gamma1_max, quiet.gamma2_max
        )
        ok = ok and all(cond)
        ok = ok and centralized.solve_global(quiet).strategy is centralized.Strategy.NO_SIC

        sym = random_symmetric(rng, gamma_range=(1e6, 1e6), ordered=False)
        # the gap formula belongs to the R2-cancelling variant; bound the
        # global optimum with the orientation whose variant dominates
        omega = max(
            centralized.single_tx_gap_omega(sym),
            centralized.single_tx_gap_omega(sym.swapped()),
        )
        best = centralized.solve_global(sym.to_gains())
        ok = ok and best.sum_rate <= phi(sym.gamma) * (1.0 + 5.0 * omega)
        ok = ok and phi(sym.gamma) >= (
            sum_rate_partial_I(sym) * (1.0 - centralized.single_tx_gap_omega(sym)) - 1e-12
        )

        if ok:
            result.passed += 1
        else:
            result.failed += 1
            if len(result.details) < 3:
                result.details.append(f"instance {k}: gains={gains}")
    return result


def run_verification(seed: int = 0, instances: int = 200, grid_points: int = 201,
                     sim_tol_factor: float = 5.0) -> list[SuiteResult]:
    return [
        suite_solver_vs_oracle(seed, instances, grid_points),
        suite_theorem_vs_sim(seed + 1, instances, tol_factor=sim_tol_factor),
        suite_propositions(seed + 2, instances),
    ]
