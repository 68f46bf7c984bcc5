"""Brute-force verifiers: exhaustive power-grid search and trajectory averaging.

Test-side machinery only; the closed-form solvers never call into this
module, so the two sides stay independent checks of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .centralized import Allocation, Strategy
from .channel import ChannelGains
from .sim import Trajectory

_LN2 = float(np.log(2.0))


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: ``n_points`` per power axis, spanning [0, peak SNR]
    inclusive so box corners are exact grid points."""

    n_points: int = 201

    def __post_init__(self) -> None:
        if self.n_points < 11:
            raise ValueError(f"n_points must be >= 11, got {self.n_points!r}")


def _phi_arr(x: np.ndarray) -> np.ndarray:
    return np.log1p(x) / _LN2


def _grid_rates(gains: ChannelGains, strategy: Strategy, g1: np.ndarray, g2: np.ndarray):
    a11, a12, a21, a22 = gains.g11, gains.g12, gains.g21, gains.g22
    if strategy is Strategy.NO_SIC:
        r1 = _phi_arr(a11 * g1 / (a21 * g2 + 1.0))
        r2 = _phi_arr(a22 * g2 / (a12 * g1 + 1.0))
    elif strategy is Strategy.PARTIAL_SIC_R2:
        r1 = np.minimum(
            _phi_arr(a12 * g1 / (a22 * g2 + 1.0)),
            _phi_arr(a11 * g1 / (a21 * g2 + 1.0)),
        )
        r2 = _phi_arr(a22 * g2)
    elif strategy is Strategy.PARTIAL_SIC_R1:
        r2 = np.minimum(
            _phi_arr(a21 * g2 / (a11 * g1 + 1.0)),
            _phi_arr(a22 * g2 / (a12 * g1 + 1.0)),
        )
        r1 = _phi_arr(a11 * g1)
    else:
        r1 = np.minimum(_phi_arr(a12 * g1 / (a22 * g2 + 1.0)), _phi_arr(a11 * g1))
        r2 = np.minimum(_phi_arr(a21 * g2 / (a11 * g1 + 1.0)), _phi_arr(a22 * g2))
    return r1, r2


def grid_optimize(gains: ChannelGains, strategy: Strategy, spec: GridSpec = GridSpec()) -> Allocation:
    """Exhaustively evaluate the sub-problem objective of ``strategy`` on the
    power grid and return the best point found.

    Never consults the closed-form candidate sets.  Ties resolve to the
    lexicographically smallest (gamma1, gamma2), which is what argmax over a
    row-major grid yields.
    """
    ax1 = np.linspace(0.0, gains.gamma1_max, spec.n_points)
    ax2 = np.linspace(0.0, gains.gamma2_max, spec.n_points)
    g1, g2 = np.meshgrid(ax1, ax2, indexing="ij")
    r1, r2 = _grid_rates(gains, strategy, g1, g2)
    total = r1 + r2
    flat = int(np.argmax(total))
    i, j = divmod(flat, spec.n_points)
    return Allocation(
        strategy=strategy,
        gamma1=float(ax1[i]),
        gamma2=float(ax2[j]),
        r1=float(r1[i, j]),
        r2=float(r2[i, j]),
        sum_rate=float(total[i, j]),
    )


def grid_optimize_global(gains: ChannelGains, spec: GridSpec = GridSpec()) -> Allocation:
    """Best grid point over all four architectures, same tie order as the
    closed-form global solver."""
    best = None
    for strategy in (
        Strategy.NO_SIC,
        Strategy.PARTIAL_SIC_R2,
        Strategy.PARTIAL_SIC_R1,
        Strategy.FULL_SIC,
    ):
        alloc = grid_optimize(gains, strategy, spec)
        if best is None or alloc.sum_rate > best.sum_rate:
            best = alloc
    assert best is not None
    return best


def lipschitz_tolerance(gains: ChannelGains, spec: GridSpec = GridSpec()) -> float:
    """Conservative bound on how far the true sub-problem optimum can sit
    above the best grid value: per-axis slope bound times half a grid cell.

    Every rate term's partial derivative is bounded by (numerator gain)/ln 2
    in its own power and by (denominator gain)/ln 2 in the other, so the sum
    of all four gains over ln 2 bounds the objective slope on either axis.
    """
    slope = (gains.g11 + gains.g12 + gains.g21 + gains.g22) / _LN2
    h1 = gains.gamma1_max / (spec.n_points - 1)
    h2 = gains.gamma2_max / (spec.n_points - 1)
    return slope * (h1 + h2) / 2.0


def time_average(traj: Trajectory, window: int, component: str = "sum") -> float:
    """Trapezoidal time average over the first ``window`` whole steady-state
    periods of the trajectory.

    ``component`` selects the delivered sum throughput (default) or a single
    user's transmitted rate ("r1" / "r2").
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window!r}")
    n = traj.config.steps_per_period
    start = traj.steady_start
    stop = start + window * n + 1
    if stop > len(traj.t):
        raise ValueError(
            f"trajectory holds {(len(traj.t) - 1 - start) // n} complete steady "
            f"periods, {window} requested"
        )
    if component == "sum":
        y = traj.throughput[start:stop]
    elif component == "r1":
        y = traj.r1[start:stop]
    elif component == "r2":
        y = traj.r2[start:stop]
    else:
        raise ValueError(f"unknown component {component!r}")
    dt = traj.config.dt
    return float(np.trapezoid(y, dx=dt) / (window * n * dt))
