"""Closed forms for the normalized symmetric channel.

Everything here is a direct formula in (epsilon, mu, gamma): the three
candidate sum rates, the boundary where cancellation stops paying off, and
the landmark rates that drive the decentralized algorithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import SymmetricChannel, phi
from .centralized import Strategy


@dataclass(frozen=True)
class Landmarks:
    """Characteristic rates of a symmetric channel, in bits/s/Hz.

    mv   largest single-link rate, phi(gamma)
    ws1  rate decodable at R1 with the other transmitter as noise
    ws2  same for R2
    op1  rate of T1 that R2 can decode for cancellation
    op2  rate of T2 that R1 can decode for cancellation
    th   ceiling above which no interference is ever cancellable

    For any margins in (0, 1): op_i <= th < ws_j <= mv.
    """

    mv: float
    ws1: float
    ws2: float
    op1: float
    op2: float
    th: float


def landmarks(sym: SymmetricChannel) -> Landmarks:
    g = sym.gamma
    return Landmarks(
        mv=phi(g),
        ws1=phi(g / ((1.0 - sym.epsilon) * g + 1.0)),
        ws2=phi(g / ((1.0 - sym.mu) * g + 1.0)),
        op1=phi((1.0 - sym.mu) * g / (g + 1.0)),
        op2=phi((1.0 - sym.epsilon) * g / (g + 1.0)),
        th=phi(g / (g + 1.0)),
    )


def sum_rate_no_sic(sym: SymmetricChannel) -> float:
    """Sum rate with both transmitters at peak power and no cancellation."""
    m = landmarks(sym)
    return m.ws1 + m.ws2


def sum_rate_partial_I(sym: SymmetricChannel) -> float:
    """Sum rate when R2 cancels: T2 at the single-link maximum, T1 capped at
    the rate R2 can decode for subtraction."""
    m = landmarks(sym)
    return m.op1 + m.mv


def sum_rate_partial_II(sym: SymmetricChannel) -> float:
    """Sum rate when R1 cancels: T1 at the single-link maximum, T2 capped at
    the rate R1 can decode for subtraction."""
    m = landmarks(sym)
    return m.mv + m.op2


def switching_curve_mu(epsilon: float, gamma: float) -> float:
    """The mu at which no-cancellation and the R1-cancelling strategy tie,
    for a given epsilon: the solution of (1 - eps) ((1 - mu) gamma + 1) = 1.

    The result lies in (0, 1) exactly when epsilon < gamma / (1 + gamma);
    for larger epsilon the returned value is <= 0, meaning no-cancellation
    wins for every mu at this epsilon.
    """
    if not (0.0 < epsilon < 1.0):
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    if not (math.isfinite(gamma) and gamma > 0.0):
        raise ValueError(f"gamma must be finite and > 0, got {gamma!r}")
    return 1.0 - epsilon / ((1.0 - epsilon) * gamma)


def diagonal_intersection_q(gamma: float) -> float:
    """Margin at which the switching boundary meets the diagonal mu == eps.

    Evaluated as 2 gamma / (1 + 2 gamma + sqrt(1 + 4 gamma)), which is free
    of cancellation for small gamma.
    """
    if not (math.isfinite(gamma) and gamma > 0.0):
        raise ValueError(f"gamma must be finite and > 0, got {gamma!r}")
    return 2.0 * gamma / (1.0 + 2.0 * gamma + math.sqrt(1.0 + 4.0 * gamma))


def classify_region(sym: SymmetricChannel) -> Strategy:
    """Which of the three candidate strategies attains the symmetric optimum.

    Recomputes all three closed forms instead of consulting the switching
    curve, which avoids curve-inversion edge cases.  Ties resolve in the
    order NoSic, PartialSicR1, PartialSicR2.
    """
    contenders = (
        (Strategy.NO_SIC, sum_rate_no_sic(sym)),
        (Strategy.PARTIAL_SIC_R1, sum_rate_partial_II(sym)),
        (Strategy.PARTIAL_SIC_R2, sum_rate_partial_I(sym)),
    )
    best_strategy, best_rate = contenders[0]
    for strategy, rate in contenders[1:]:
        if rate > best_rate:
            best_strategy, best_rate = strategy, rate
    return best_strategy


def symmetric_optimum(sym: SymmetricChannel) -> float:
    """max of the three candidate sum rates."""
    return max(sum_rate_no_sic(sym), sum_rate_partial_I(sym), sum_rate_partial_II(sym))
