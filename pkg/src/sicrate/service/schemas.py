"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SymmetricChannelIn(BaseModel):
    epsilon: float = Field(gt=0, lt=1, description="margin of the direct link over the T2-to-R1 cross link")
    mu: float = Field(gt=0, lt=1, description="margin of the direct link over the T1-to-R2 cross link")
    gamma: float = Field(gt=0, description="shared peak SNR")


class GainsIn(BaseModel):
    g11: float = Field(gt=0)
    g12: float = Field(gt=0)
    g21: float = Field(gt=0)
    g22: float = Field(gt=0)
    gamma1_max: float = Field(ge=0)
    gamma2_max: float = Field(ge=0)


class AllocationOut(BaseModel):
    strategy: str
    gamma1: float
    gamma2: float
    r1: float
    r2: float
    sum_rate: float


class LandmarksOut(BaseModel):
    mv: float
    ws1: float
    ws2: float
    op1: float
    op2: float
    th: float


class ClassifyOut(BaseModel):
    strategy: str
    r_ns: float
    r_pi: float
    r_pii: float
    r_opt: float


class ExpectedRatesOut(BaseModel):
    e_r1: float
    e_r2: float
    e_sum: float
    t_prime_frac: float
    t_double_prime_frac: float
    r_opt: float
    e_greedy: float
    e_orth: float
    rho_osc: float
    rho_greedy: float
    rho_orth: float


class SwitchingCurveOut(BaseModel):
    epsilon: float
    gamma: float
    mu: float
    q: float


class SimulateIn(SymmetricChannelIn):
    period: float = Field(default=1.0, gt=0)
    dt: float | None = Field(default=None, gt=0)
    n_periods: int = Field(default=10, ge=1)
    include_init: bool = True


class SimulateOut(BaseModel):
    greedy_user: int
    ramp_speed: float
    n_samples: int
    events: dict[str, float | None]
    steady_average: float
    e_sum_closed_form: float
