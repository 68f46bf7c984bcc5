"""Deterministic time-stepped simulation of the decentralized rate oscillation.

Both transmitters hold peak power throughout and adapt only their rates.
One synchronized descent from the top rate discovers the roles: the receiver
that first becomes able to cancel the other signal fixes its transmitter as
the greedy side, the other transmitter becomes the sawtooth side.  In steady
state the sawtooth ramps its rate every period while the greedy side rides
interference cancellation whenever the ramp permits it.

Threshold comparisons use <= (decoding at equality) and transitions take
effect at the first sample satisfying their condition.  Within a period,
samples are generated from integer step indices, so steady-state samples one
period apart are identical bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channel import SymmetricChannel
from .symmetric import Landmarks, landmarks

PHASE_INIT = "Init"
PHASE_STEADY = "Steady"


@dataclass(frozen=True)
class SimConfig:
    """Run parameters.  ``dt`` defaults to ``period / 1000``; it must resolve
    at least 100 steps per period."""

    sym: SymmetricChannel
    period: float = 1.0
    dt: float | None = None
    n_periods: int = 10
    include_init: bool = True

    def __post_init__(self) -> None:
        if not (math.isfinite(self.period) and self.period > 0.0):
            raise ValueError(f"period must be finite and > 0, got {self.period!r}")
        if self.dt is None:
            object.__setattr__(self, "dt", self.period / 1000.0)
        if not (math.isfinite(self.dt) and self.dt > 0.0):
            raise ValueError(f"dt must be finite and > 0, got {self.dt!r}")
        if self.dt > self.period / 100.0:
            raise ValueError(f"dt must be <= period/100, got {self.dt!r}")
        if self.n_periods < 1:
            raise ValueError(f"n_periods must be >= 1, got {self.n_periods!r}")

    @property
    def steps_per_period(self) -> int:
        return int(round(self.period / self.dt))


@dataclass
class Trajectory:
    """Sampled run of the algorithm.

    Parallel arrays, one entry per sample; the builders mark them read-only,
    so a finished run can be shared across threads.  ``greedy_user`` is the
    index of the transmitter that won the cancellation role; ``ramp_speed``
    is the sawtooth slope in bits/s/Hz per second.
    """

    t: np.ndarray
    r1: np.ndarray
    r2: np.ndarray
    r1_decoded: np.ndarray
    r2_decoded: np.ndarray
    sic_at_r1: np.ndarray
    sic_at_r2: np.ndarray
    is_init: np.ndarray
    config: SimConfig
    greedy_user: int
    ramp_speed: float
    steady_start: int
    marks: Landmarks = field(repr=False)

    def __len__(self) -> int:
        return len(self.t)

    @property
    def throughput(self) -> np.ndarray:
        """Sum rate actually delivered: undecodable signals count as zero."""
        return self.r1 * self.r1_decoded + self.r2 * self.r2_decoded

    def phase_labels(self) -> np.ndarray:
        return np.where(self.is_init, PHASE_INIT, PHASE_STEADY)


def sawtooth_r2(t: float, sym: SymmetricChannel, period: float) -> float:
    """Rate of the sawtooth transmitter (user 2 for mu >= epsilon) at time t.

    Ramps from zero at slope ws2/period; once the ramp passes the universal
    cancellation ceiling it holds at ws2 until the period ends, since rates
    in between are undecodable for the other receiver anyway.
    """
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    m = landmarks(sym)
    v = m.ws2 / period
    value = v * math.fmod(t, period)
    return value if value <= m.th else m.ws2


def greedy_r1(r2_now: float, sym: SymmetricChannel) -> float:
    """Rate of the greedy transmitter (user 1 for mu >= epsilon) given the
    other side's current rate: the single-link maximum while the interference
    is cancellable, the interference-tolerant rate otherwise."""
    if r2_now < 0.0:
        raise ValueError(f"r2_now must be >= 0, got {r2_now!r}")
    m = landmarks(sym)
    return m.mv if r2_now <= m.op2 else m.ws1


def _canonical(sym: SymmetricChannel) -> tuple[SymmetricChannel, int]:
    """Channel relabeled so the greedy role falls on user 1.  The first
    receiver able to cancel wins the role; the tie goes to user 1."""
    if sym.mu >= sym.epsilon:
        return sym, 1
    return sym.swapped(), 2


def _init_arrays(cfg: SimConfig, m: Landmarks):
    """Canonical init phase: both rates descend from the top at slope mv/period,
    the greedy side jumps back to the top once the ramp becomes cancellable."""
    n = cfg.steps_per_period
    i = np.arange(n)
    t = i * cfg.dt
    ramp = m.mv * (1.0 - t / cfg.period)
    cancellable = ramp <= m.op2
    r_greedy = np.where(cancellable, m.mv, ramp)
    r_saw = ramp
    sic_rg = cancellable
    sic_rs = r_greedy <= m.op1
    saw_decoded = r_saw <= m.ws2
    greedy_decoded = r_greedy <= np.where(sic_rg, m.mv, m.ws1)
    return t, r_greedy, r_saw, greedy_decoded, saw_decoded, sic_rg, sic_rs


def _steady_arrays(cfg: SimConfig, m: Landmarks, t_offset: float):
    n = cfg.steps_per_period
    j = np.arange(cfg.n_periods * n + 1)
    s = (j % n) * cfg.dt
    v = m.ws2 / cfg.period
    ramp = v * s
    r_saw = np.where(ramp <= m.th, ramp, m.ws2)
    cancellable = r_saw <= m.op2
    r_greedy = np.where(cancellable, m.mv, m.ws1)
    sic_rg = cancellable
    sic_rs = r_greedy <= m.op1
    saw_decoded = r_saw <= m.ws2
    greedy_decoded = r_greedy <= np.where(sic_rg, m.mv, m.ws1)
    t = t_offset + j * cfg.dt
    return t, r_greedy, r_saw, greedy_decoded, saw_decoded, sic_rg, sic_rs


def _assemble(cfg: SimConfig, parts: list[tuple], init_count: int) -> Trajectory:
    canon_sym, greedy_user = _canonical(cfg.sym)
    m = landmarks(canon_sym)
    t = np.concatenate([p[0] for p in parts])
    r_g = np.concatenate([p[1] for p in parts])
    r_s = np.concatenate([p[2] for p in parts])
    dec_g = np.concatenate([p[3] for p in parts])
    dec_s = np.concatenate([p[4] for p in parts])
    sic_g = np.concatenate([p[5] for p in parts])
    sic_s = np.concatenate([p[6] for p in parts])
    is_init = np.zeros(len(t), dtype=bool)
    is_init[:init_count] = True
    if greedy_user == 1:
        r1, r2, d1, d2, s1, s2 = r_g, r_s, dec_g, dec_s, sic_g, sic_s
    else:
        r1, r2, d1, d2, s1, s2 = r_s, r_g, dec_s, dec_g, sic_s, sic_g
    for arr in (t, r1, r2, d1, d2, s1, s2, is_init):
        arr.setflags(write=False)
    return Trajectory(
        t=t,
        r1=r1,
        r2=r2,
        r1_decoded=d1,
        r2_decoded=d2,
        sic_at_r1=s1,
        sic_at_r2=s2,
        is_init=is_init,
        config=cfg,
        greedy_user=greedy_user,
        ramp_speed=m.ws2 / cfg.period,
        steady_start=init_count,
        marks=landmarks(cfg.sym),
    )


def run_init_phase(cfg: SimConfig) -> tuple[Trajectory, int]:
    """Initialization descent only.  Returns the segment and the index of the
    transmitter assigned the greedy role."""
    canon_sym, greedy_user = _canonical(cfg.sym)
    part = _init_arrays(cfg, landmarks(canon_sym))
    traj = _assemble(cfg, [part], init_count=len(part[0]))
    return traj, greedy_user


def run_steady_state(cfg: SimConfig) -> Trajectory:
    """Steady-state segment only, starting at a period boundary (t = 0)."""
    canon_sym, _ = _canonical(cfg.sym)
    part = _steady_arrays(cfg, landmarks(canon_sym), t_offset=0.0)
    return _assemble(cfg, [part], init_count=0)


def simulate(cfg: SimConfig) -> Trajectory:
    """Full run: init descent (when configured) followed by ``n_periods``
    steady periods.  Identical configs produce bit-identical trajectories."""
    canon_sym, _ = _canonical(cfg.sym)
    m = landmarks(canon_sym)
    parts = []
    init_count = 0
    offset = 0.0
    if cfg.include_init:
        init_part = _init_arrays(cfg, m)
        parts.append(init_part)
        init_count = len(init_part[0])
        offset = cfg.period
    parts.append(_steady_arrays(cfg, m, t_offset=offset))
    return _assemble(cfg, parts, init_count=init_count)


@dataclass(frozen=True)
class TraceEvents:
    """Times of the named transitions, linearly interpolated between the
    bracketing samples.  Init-phase events are None when the init phase was
    not simulated."""

    first_r1_decode: float | None
    first_r2_decode: float | None
    greedy_switch: float | None
    sic_loss: float | None
    ramp_jump: float | None
    greedy_user: int


def _cross_up(t: np.ndarray, margin: np.ndarray) -> float | None:
    """First time the margin becomes >= 0, interpolated on the sample pair
    straddling the crossing."""
    ok = np.nonzero(margin >= 0.0)[0]
    if len(ok) == 0:
        return None
    k = int(ok[0])
    if k == 0:
        return float(t[0])
    lo, hi = margin[k - 1], margin[k]
    if hi == lo:
        return float(t[k])
    frac = (0.0 - lo) / (hi - lo)
    return float(t[k - 1] + frac * (t[k] - t[k - 1]))


def detect_events(traj: Trajectory) -> TraceEvents:
    cfg = traj.config
    canon_sym, greedy_user = _canonical(cfg.sym)
    m = landmarks(canon_sym)
    given = traj.marks

    cap1 = np.where(traj.sic_at_r1, given.mv, given.ws1)
    cap2 = np.where(traj.sic_at_r2, given.mv, given.ws2)
    first_r1 = _cross_up(traj.t, cap1 - traj.r1)
    first_r2 = _cross_up(traj.t, cap2 - traj.r2)

    r_saw = traj.r2 if greedy_user == 1 else traj.r1
    sic_g = traj.sic_at_r1 if greedy_user == 1 else traj.sic_at_r2

    greedy_switch = None
    if cfg.include_init and traj.steady_start > 0:
        init_saw = r_saw[: traj.steady_start]
        greedy_switch = _cross_up(traj.t[: traj.steady_start], m.op2 - init_saw)

    sic_loss = None
    ramp_jump = None
    start = traj.steady_start
    lost = np.nonzero(sic_g[start:-1] & ~sic_g[start + 1 :])[0]
    if len(lost) > 0:
        k = start + int(lost[0]) + 1
        lo, hi = r_saw[k - 1] - m.op2, r_saw[k] - m.op2
        frac = (0.0 - lo) / (hi - lo)
        sic_loss = float(traj.t[k - 1] + frac * (traj.t[k] - traj.t[k - 1]))
    jumped = np.nonzero((r_saw[start:-1] <= m.th) & (r_saw[start + 1 :] > m.th))[0]
    if len(jumped) > 0:
        k = start + int(jumped[0]) + 1
        lo, hi = r_saw[k - 1] - m.th, r_saw[k] - m.th
        frac = (0.0 - lo) / (hi - lo)
        ramp_jump = float(traj.t[k - 1] + frac * (traj.t[k] - traj.t[k - 1]))

    return TraceEvents(
        first_r1_decode=first_r1,
        first_r2_decode=first_r2,
        greedy_switch=greedy_switch,
        sic_loss=sic_loss,
        ramp_jump=ramp_jump,
        greedy_user=greedy_user,
    )
