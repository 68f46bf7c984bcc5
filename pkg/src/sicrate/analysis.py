"""Closed-form performance of the rate oscillation and benchmark strategies.

The steady-state pattern is periodic, so its time averages reduce to
landmark-rate arithmetic and carry no dependence on the period length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import SymmetricChannel, phi
from .symmetric import (
    landmarks,
    sum_rate_no_sic,
    sum_rate_partial_I,
    sum_rate_partial_II,
    symmetric_optimum,
)


@dataclass(frozen=True)
class ExpectedRates:
    """Period averages of the two steady-state rates.

    ``t_prime`` and ``t_double_prime`` are the in-period instants (as
    fractions of the period) at which cancellation is lost and at which the
    sawtooth jumps to its ceiling; they satisfy 0 <= t' <= t'' <= 1.
    """

    e_r1: float
    e_r2: float
    e_sum: float
    t_prime: float
    t_double_prime: float


def t_prime(sym: SymmetricChannel, period: float) -> float:
    """Time into each period at which the sawtooth rate stops being
    cancellable at the other receiver: period * op2 / ws2."""
    _check_period(period)
    m = landmarks(sym)
    return period * m.op2 / m.ws2


def t_double_prime(sym: SymmetricChannel, period: float) -> float:
    """Time into each period at which the sawtooth ramp passes the universal
    cancellation ceiling and jumps to its own decode limit: period * th / ws2."""
    _check_period(period)
    m = landmarks(sym)
    return period * m.th / m.ws2


def expected_rates(sym: SymmetricChannel) -> ExpectedRates:
    """Steady-state period averages of both rates.

    Stated for the labeling with user 1 in the greedy role (mu >= epsilon);
    other inputs are index-swapped internally and swapped back, so e_r1
    always refers to the actual user 1.
    """
    swap = sym.mu < sym.epsilon
    c = sym.swapped() if swap else sym
    m = landmarks(c)
    frac_sic = m.op2 / m.ws2
    frac_jump = m.th / m.ws2
    e_greedy = frac_sic * (m.mv - m.ws1) + m.ws1
    e_saw = m.th * m.th / (2.0 * m.ws2) + m.ws2 - m.th
    e_r1, e_r2 = (e_saw, e_greedy) if swap else (e_greedy, e_saw)
    return ExpectedRates(
        e_r1=e_r1,
        e_r2=e_r2,
        e_sum=e_r1 + e_r2,
        t_prime=frac_sic,
        t_double_prime=frac_jump,
    )


def efficiency_osc(sym: SymmetricChannel) -> float:
    """Average oscillation sum rate over the best fixed-strategy sum rate."""
    return expected_rates(sym).e_sum / symmetric_optimum(sym)


def benchmark_greedy(sym: SymmetricChannel) -> float:
    """Both transmitters at peak power and at the largest rate their own
    receiver tolerates, ignoring the interference they cause: identical to
    the no-cancellation sum rate."""
    return sum_rate_no_sic(sym)


def benchmark_orthogonal(sym: SymmetricChannel) -> float:
    """Each transmitter active alone for half the time at full rate: the
    average equals a single full-rate link."""
    return phi(sym.gamma)


@dataclass(frozen=True)
class ComparisonRow:
    """One sweep point: expected sum rates and efficiencies of the
    oscillation, greedy, and orthogonal strategies."""

    epsilon: float
    mu: float
    gamma: float
    r_opt: float
    e_osc: float
    e_greedy: float
    e_orth: float
    rho_osc: float
    rho_greedy: float
    rho_orth: float


def comparison_row(epsilon: float, mu: float, gamma: float) -> ComparisonRow:
    sym = SymmetricChannel(epsilon=epsilon, mu=mu, gamma=gamma)
    r_opt = symmetric_optimum(sym)
    e_osc = expected_rates(sym).e_sum
    e_greedy = benchmark_greedy(sym)
    e_orth = benchmark_orthogonal(sym)
    return ComparisonRow(
        epsilon=epsilon,
        mu=mu,
        gamma=gamma,
        r_opt=r_opt,
        e_osc=e_osc,
        e_greedy=e_greedy,
        e_orth=e_orth,
        rho_osc=e_osc / r_opt,
        rho_greedy=e_greedy / r_opt,
        rho_orth=e_orth / r_opt,
    )


def margin_grid(step: float) -> list[float]:
    """Margin sample points i*step strictly inside (0, 1)."""
    if not (0.0 < step < 0.5):
        raise ValueError(f"grid step must lie in (0, 0.5), got {step!r}")
    points = []
    i = 1
    while True:
        v = round(i * step, 12)
        if v >= 1.0 - 1e-12:
            break
        points.append(v)
        i += 1
    return points


def sweep(gamma: float, grid_step: float, mu_fixed: float | None = None) -> list[ComparisonRow]:
    """Comparison rows over the margin grid.

    Without ``mu_fixed``: the full (epsilon, mu) grid in lexicographic order.
    With it: a one-dimensional epsilon sweep at that mu.
    """
    points = margin_grid(grid_step)
    if mu_fixed is not None:
        if not (0.0 < mu_fixed < 1.0):
            raise ValueError(f"mu_fixed must lie in (0, 1), got {mu_fixed!r}")
        return [comparison_row(eps, mu_fixed, gamma) for eps in points]
    return [comparison_row(eps, mu, gamma) for eps in points for mu in points]


def _check_period(period: float) -> None:
    if not (math.isfinite(period) and period > 0.0):
        raise ValueError(f"period must be finite and > 0, got {period!r}")
