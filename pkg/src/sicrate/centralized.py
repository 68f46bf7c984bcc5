"""Centralized sum-rate maximization over the three decoding architectures.

Each architecture's power sub-problem has its optimum in a small finite
candidate set (corners of the power box, plus two interior break points in
the full-cancellation case).  The solvers evaluate those candidates exactly
and never run a descent method, so results are reproducible to the last bit
and easy to verify against a brute-force grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .channel import ChannelGains, SymmetricChannel, phi

_LN2 = math.log(2.0)


class Strategy(str, Enum):
    """Decoding architecture of an allocation.

    ``PARTIAL_SIC_R1`` means receiver 1 decodes and subtracts the interfering
    signal; ``PARTIAL_SIC_R2`` is the mirrored case.
    """

    NO_SIC = "NoSic"
    PARTIAL_SIC_R1 = "PartialSicR1"
    PARTIAL_SIC_R2 = "PartialSicR2"
    FULL_SIC = "FullSic"


@dataclass(frozen=True)
class Allocation:
    """A rate-power operating point together with its architecture."""

    strategy: Strategy
    gamma1: float
    gamma2: float
    r1: float
    r2: float
    sum_rate: float


def threshold_kt(gains: ChannelGains) -> float:
    """Break point (g11 - g12) / (g12 g21 - g11 g22) separating which of the
    two decodability constraints binds in the one-sided cancellation problem.

    Returns signed infinity when only the denominator vanishes and NaN for
    the degenerate 0/0 case.
    """
    num = gains.g11 - gains.g12
    den = gains.g12 * gains.g21 - gains.g11 * gains.g22
    if den == 0.0:
        if num == 0.0:
            return math.nan
        return math.copysign(math.inf, num)
    return num / den


def _no_sic_rates(gains: ChannelGains, g1: float, g2: float) -> tuple[float, float]:
    r1 = phi(gains.g11 * g1 / (gains.g21 * g2 + 1.0))
    r2 = phi(gains.g22 * g2 / (gains.g12 * g1 + 1.0))
    return r1, r2


def _partial_r2_rates(gains: ChannelGains, g1: float, g2: float) -> tuple[float, float]:
    # R2 cancels: T1's signal must be decodable both at R2 (for subtraction)
    # and at R1 (for delivery); T2 then runs interference-free.
    r1 = min(
        phi(gains.g12 * g1 / (gains.g22 * g2 + 1.0)),
        phi(gains.g11 * g1 / (gains.g21 * g2 + 1.0)),
    )
    r2 = phi(gains.g22 * g2)
    return r1, r2


def _full_sic_rates(gains: ChannelGains, g1: float, g2: float) -> tuple[float, float]:
    r1 = min(phi(gains.g12 * g1 / (gains.g22 * g2 + 1.0)), phi(gains.g11 * g1))
    r2 = min(phi(gains.g21 * g2 / (gains.g11 * g1 + 1.0)), phi(gains.g22 * g2))
    return r1, r2


def _best(strategy: Strategy, rater, candidates) -> Allocation:
    """Evaluate ``rater`` on candidate power pairs and keep the first strict
    maximum, so ties resolve to the earliest candidate in the given order."""
    best = None
    for g1, g2 in candidates:
        r1, r2 = rater(g1, g2)
        total = r1 + r2
        if best is None or total > best.sum_rate:
            best = Allocation(strategy, g1, g2, r1, r2, total)
    assert best is not None
    return best


def _corners(gains: ChannelGains) -> list[tuple[float, float]]:
    c1 = [0.0] if gains.gamma1_max == 0.0 else [0.0, gains.gamma1_max]
    c2 = [0.0] if gains.gamma2_max == 0.0 else [0.0, gains.gamma2_max]
    return [(a, b) for a in c1 for b in c2]


def solve_no_sic(gains: ChannelGains) -> Allocation:
    """Best sum rate when both receivers treat interference as noise.

    The objective has no interior critical point, so only the four corners
    of the power box need to be checked.
    """
    return _best(Strategy.NO_SIC, lambda a, b: _no_sic_rates(gains, a, b), _corners(gains))


def solve_partial_sic(gains: ChannelGains, canceller: int) -> Allocation:
    """Best sum rate when exactly one receiver cancels the interference.

    ``canceller`` names the receiver performing the cancellation.  The
    cancelled transmitter always uses peak power; the other one is best at
    zero or peak, never in between.
    """
    if canceller == 1:
        inner = solve_partial_sic(gains.swapped(), 2)
        return Allocation(
            Strategy.PARTIAL_SIC_R1,
            gamma1=inner.gamma2,
            gamma2=inner.gamma1,
            r1=inner.r2,
            r2=inner.r1,
            sum_rate=inner.sum_rate,
        )
    if canceller != 2:
        raise ValueError(f"canceller must be 1 or 2, got {canceller!r}")
    g1m, g2m = gains.gamma1_max, gains.gamma2_max
    candidates = [(g1m, 0.0)] if g2m == 0.0 else [(g1m, 0.0), (g1m, g2m)]
    return _best(
        Strategy.PARTIAL_SIC_R2, lambda a, b: _partial_r2_rates(gains, a, b), candidates
    )


def full_sic_candidates(gains: ChannelGains) -> tuple[list[float], list[float]]:
    """Candidate powers for the both-receivers-cancel problem: box corners
    plus the break points where each min-constraint switches branch.
    Out-of-range break points are discarded; the corners already cover the
    boundary."""
    k1 = (gains.g21 - gains.g22) / (gains.g11 * gains.g22)
    k2 = (gains.g12 - gains.g11) / (gains.g11 * gains.g22)

    def axis(peak: float, interior: float) -> list[float]:
        vals = [0.0] if peak == 0.0 else [0.0, peak]
        if 0.0 < interior < peak:
            vals.append(interior)
        return sorted(set(vals))

    return axis(gains.gamma1_max, k1), axis(gains.gamma2_max, k2)


def solve_full_sic(gains: ChannelGains) -> Allocation:
    """Best sum rate when both receivers decode and subtract the interference."""
    c1, c2 = full_sic_candidates(gains)
    candidates = [(a, b) for a in c1 for b in c2]
    return _best(Strategy.FULL_SIC, lambda a, b: _full_sic_rates(gains, a, b), candidates)


def solve_global(gains: ChannelGains) -> Allocation:
    """Best sum rate over all architectures.

    Ties resolve in the fixed order NoSic, PartialSicR2, PartialSicR1,
    FullSic so the output is deterministic on switching boundaries.
    """
    best = None
    for alloc in (
        solve_no_sic(gains),
        solve_partial_sic(gains, 2),
        solve_partial_sic(gains, 1),
        solve_full_sic(gains),
    ):
        if best is None or alloc.sum_rate > best.sum_rate:
            best = alloc
    assert best is not None
    return best


def rate_bounds(gains: ChannelGains, strategy: Strategy, gamma1: float, gamma2: float) -> tuple[float, float]:
    """Per-user rate ceilings of ``strategy``'s sub-problem at fixed powers."""
    if strategy is Strategy.NO_SIC:
        return _no_sic_rates(gains, gamma1, gamma2)
    if strategy is Strategy.PARTIAL_SIC_R2:
        return _partial_r2_rates(gains, gamma1, gamma2)
    if strategy is Strategy.PARTIAL_SIC_R1:
        r2, r1 = _partial_r2_rates(gains.swapped(), gamma2, gamma1)
        return r1, r2
    return _full_sic_rates(gains, gamma1, gamma2)


def allocation_violation(gains: ChannelGains, alloc: Allocation) -> float:
    """Largest amount by which an allocation breaks its own sub-problem
    constraints (0.0 for a feasible one)."""
    b1, b2 = rate_bounds(gains, alloc.strategy, alloc.gamma1, alloc.gamma2)
    worst = max(alloc.r1 - b1, alloc.r2 - b2, -alloc.r1, -alloc.r2)
    worst = max(worst, abs(alloc.sum_rate - (alloc.r1 + alloc.r2)))
    worst = max(worst, alloc.gamma1 - gains.gamma1_max, -alloc.gamma1)
    worst = max(worst, alloc.gamma2 - gains.gamma2_max, -alloc.gamma2)
    return max(worst, 0.0)


def check_proposition1(gains: ChannelGains, tol: float = 1e-12) -> bool:
    """Under dominant intended links: no cancellation beats full cancellation,
    and the overall optimum spends both power budgets fully."""
    if not gains.dominant_intended_links:
        raise ValueError(
            "proposition holds only for dominant intended links (g11 > g12 and g22 > g21)"
        )
    ns = solve_no_sic(gains)
    fs = solve_full_sic(gains)
    best = solve_global(gains)
    return (
        ns.sum_rate >= fs.sum_rate - tol
        and best.gamma1 == gains.gamma1_max
        and best.gamma2 == gains.gamma2_max
    )


def check_proposition2_conditions(
    gains: ChannelGains, gamma1: float, gamma2: float
) -> tuple[bool, bool]:
    """SNR thresholds below which treating interference as noise beats each
    one-sided cancellation variant.  Both true together means no-cancellation
    dominates at these powers; both hold in the high-noise limit."""
    first = gamma2 < (gains.g11 - gains.g12) / (gains.g21 * gains.g12)
    second = gamma1 < (gains.g22 - gains.g21) / (gains.g12 * gains.g21)
    return first, second


def single_tx_gap_omega(sym: SymmetricChannel) -> float:
    """Relative gap between single-transmitter operation and the best
    one-sided cancellation sum rate; vanishes as the SNR grows."""
    g = sym.to_gains()
    gamma = sym.gamma
    return phi(g.g12 / g.g22) / (
        phi(g.g12 * gamma / (g.g22 * gamma + 1.0)) + phi(g.g22 * gamma)
    )
