"""Two-user Gaussian interference channel primitives.

All rates are spectral efficiencies in bits/s/Hz.  Transmit powers are
expressed as SNRs (power over noise variance), so the noise level never
appears as a separate parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_LN2 = math.log(2.0)


def phi(x: float) -> float:
    """Shannon rate log2(1 + x) of an AWGN link at effective SINR x.

    Raises ValueError on negative or non-finite input.
    """
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"phi requires a finite x >= 0, got {x!r}")
    return math.log1p(x) / _LN2


@dataclass(frozen=True)
class ChannelGains:
    """Path gains and peak SNRs of two interfering transmitter/receiver pairs.

    ``gij`` is the power path loss from transmitter i to receiver j.  Path
    gains must be strictly positive and finite; peak SNRs must be finite and
    nonnegative (zero models a silent transmitter).
    """

    g11: float
    g12: float
    g21: float
    g22: float
    gamma1_max: float
    gamma2_max: float

    def __post_init__(self) -> None:
        for name in ("g11", "g12", "g21", "g22"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0.0:
                raise ValueError(f"{name} must be finite and > 0, got {v!r}")
        for name in ("gamma1_max", "gamma2_max"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")

    @property
    def dominant_intended_links(self) -> bool:
        """True when each transmitter reaches its own receiver more strongly
        than it reaches the other one (g11 > g12 and g22 > g21)."""
        return self.g11 > self.g12 and self.g22 > self.g21

    def gain(self, tx: int, rx: int) -> float:
        """Path gain from transmitter ``tx`` to receiver ``rx`` (indices 1/2)."""
        _check_user(tx)
        _check_user(rx)
        return getattr(self, f"g{tx}{rx}")

    def peak_snr(self, user: int) -> float:
        _check_user(user)
        return self.gamma1_max if user == 1 else self.gamma2_max

    def swapped(self) -> "ChannelGains":
        """The same channel with the two user indices exchanged."""
        return ChannelGains(
            g11=self.g22,
            g12=self.g21,
            g21=self.g12,
            g22=self.g11,
            gamma1_max=self.gamma2_max,
            gamma2_max=self.gamma1_max,
        )


@dataclass(frozen=True)
class SymmetricChannel:
    """Normalized symmetric channel: unit direct gains, cross gains 1 - epsilon
    and 1 - mu, and a shared peak SNR.

    ``epsilon`` and ``mu`` are the margins by which each direct link beats the
    corresponding cross link; both live in the open interval (0, 1).
    """

    epsilon: float
    mu: float
    gamma: float

    def __post_init__(self) -> None:
        for name in ("epsilon", "mu"):
            v = getattr(self, name)
            if not (math.isfinite(v) and 0.0 < v < 1.0):
                raise ValueError(f"{name} must lie in (0, 1), got {v!r}")
        if not (math.isfinite(self.gamma) and self.gamma > 0.0):
            raise ValueError(f"gamma must be finite and > 0, got {self.gamma!r}")

    def to_gains(self) -> ChannelGains:
        return ChannelGains(
            g11=1.0,
            g12=1.0 - self.mu,
            g21=1.0 - self.epsilon,
            g22=1.0,
            gamma1_max=self.gamma,
            gamma2_max=self.gamma,
        )

    def swapped(self) -> "SymmetricChannel":
        return SymmetricChannel(epsilon=self.mu, mu=self.epsilon, gamma=self.gamma)


def _check_user(i: int) -> None:
    if i not in (1, 2):
        raise ValueError(f"user index must be 1 or 2, got {i!r}")


def _check_snr_pair(gains: ChannelGains, gamma1: float, gamma2: float) -> None:
    for user, g in ((1, gamma1), (2, gamma2)):
        cap = gains.peak_snr(user)
        if not math.isfinite(g) or g < 0.0 or g > cap:
            raise ValueError(
                f"gamma{user} must lie in [0, {cap}], got {g!r}"
            )


def capacity_with_interference(
    gains: ChannelGains, tx: int, rx: int, gamma1: float, gamma2: float
) -> float:
    """Rate at which receiver ``rx`` can decode transmitter ``tx``'s signal
    while treating the other transmitter's signal as noise."""
    _check_user(tx)
    _check_user(rx)
    _check_snr_pair(gains, gamma1, gamma2)
    other = 3 - tx
    gamma = (gamma1, gamma2)[tx - 1]
    gamma_other = (gamma1, gamma2)[other - 1]
    return phi(gains.gain(tx, rx) * gamma / (gains.gain(other, rx) * gamma_other + 1.0))


def capacity_sic(gains: ChannelGains, user: int, gamma_i: float) -> float:
    """Interference-free rate of ``user``'s direct link, available once its
    receiver has decoded and subtracted the other signal."""
    _check_user(user)
    cap = gains.peak_snr(user)
    if not math.isfinite(gamma_i) or gamma_i < 0.0 or gamma_i > cap:
        raise ValueError(f"gamma{user} must lie in [0, {cap}], got {gamma_i!r}")
    return phi(gains.gain(user, user) * gamma_i)


def can_decode(rate: float, capacity: float) -> bool:
    """Whether a signal at ``rate`` is decodable on a link of ``capacity``.

    Equality counts as decodable: capacity is the supremum of achievable
    rates, and the rate schedules in this package sit exactly on it.
    """
    if rate < 0.0 or capacity < 0.0:
        raise ValueError("rate and capacity must be >= 0")
    return rate <= capacity
