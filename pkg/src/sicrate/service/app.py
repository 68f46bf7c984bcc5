"""HTTP service wrapping the solvers, closed-form analysis, and simulator.

Every endpoint is a stateless request/response computation, so the app can
serve any number of concurrent clients.  Bulk CSV generation stays in the
CLI; the service returns JSON.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from .. import analysis
from ..centralized import solve_global
from ..channel import ChannelGains, SymmetricChannel
from ..oracle import time_average
from ..sim import SimConfig, detect_events, simulate
from ..symmetric import (
    classify_region,
    diagonal_intersection_q,
    sum_rate_no_sic,
    sum_rate_partial_I,
    sum_rate_partial_II,
    switching_curve_mu,
    symmetric_optimum,
)
from .schemas import (
    AllocationOut,
    ClassifyOut,
    ExpectedRatesOut,
    GainsIn,
    LandmarksOut,
    SimulateIn,
    SimulateOut,
    SwitchingCurveOut,
    SymmetricChannelIn,
)


def _symmetric(body: SymmetricChannelIn) -> SymmetricChannel:
    return SymmetricChannel(epsilon=body.epsilon, mu=body.mu, gamma=body.gamma)


def _allocation_out(alloc) -> AllocationOut:
    return AllocationOut(
        strategy=alloc.strategy.value,
        gamma1=alloc.gamma1,
        gamma2=alloc.gamma2,
        r1=alloc.r1,
        r2=alloc.r2,
        sum_rate=alloc.sum_rate,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="sicrate",
        description="Rate-power allocation for the two-user interference "
        "channel with successive interference cancellation.",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/solve", response_model=AllocationOut)
    def solve(body: GainsIn) -> AllocationOut:
        try:
            gains = ChannelGains(**body.model_dump())
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return _allocation_out(solve_global(gains))

    @app.post("/solve/symmetric", response_model=AllocationOut)
    def solve_symmetric(body: SymmetricChannelIn) -> AllocationOut:
        return _allocation_out(solve_global(_symmetric(body).to_gains()))

    @app.post("/landmarks", response_model=LandmarksOut)
    def landmarks_endpoint(body: SymmetricChannelIn) -> LandmarksOut:
        from ..symmetric import landmarks

        m = landmarks(_symmetric(body))
        return LandmarksOut(mv=m.mv, ws1=m.ws1, ws2=m.ws2, op1=m.op1, op2=m.op2, th=m.th)

    @app.post("/classify", response_model=ClassifyOut)
    def classify(body: SymmetricChannelIn) -> ClassifyOut:
        sym = _symmetric(body)
        return ClassifyOut(
            strategy=classify_region(sym).value,
            r_ns=sum_rate_no_sic(sym),
            r_pi=sum_rate_partial_I(sym),
            r_pii=sum_rate_partial_II(sym),
            r_opt=symmetric_optimum(sym),
        )

    @app.post("/expected-rates", response_model=ExpectedRatesOut)
    def expected(body: SymmetricChannelIn) -> ExpectedRatesOut:
        sym = _symmetric(body)
        er = analysis.expected_rates(sym)
        r_opt = symmetric_optimum(sym)
        e_greedy = analysis.benchmark_greedy(sym)
        e_orth = analysis.benchmark_orthogonal(sym)
        return ExpectedRatesOut(
            e_r1=er.e_r1,
            e_r2=er.e_r2,
            e_sum=er.e_sum,
            t_prime_frac=er.t_prime,
            t_double_prime_frac=er.t_double_prime,
            r_opt=r_opt,
            e_greedy=e_greedy,
            e_orth=e_orth,
            rho_osc=er.e_sum / r_opt,
            rho_greedy=e_greedy / r_opt,
            rho_orth=e_orth / r_opt,
        )

    @app.get("/switching-curve", response_model=SwitchingCurveOut)
    def switching_curve(
        gamma: float = Query(gt=0), epsilon: float = Query(gt=0, lt=1)
    ) -> SwitchingCurveOut:
        return SwitchingCurveOut(
            epsilon=epsilon,
            gamma=gamma,
            mu=switching_curve_mu(epsilon, gamma),
            q=diagonal_intersection_q(gamma),
        )

    @app.post("/simulate", response_model=SimulateOut)
    def simulate_endpoint(body: SimulateIn) -> SimulateOut:
        sym = SymmetricChannel(epsilon=body.epsilon, mu=body.mu, gamma=body.gamma)
        try:
            cfg = SimConfig(
                sym=sym,
                period=body.period,
                dt=body.dt,
                n_periods=body.n_periods,
                include_init=body.include_init,
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        traj = simulate(cfg)
        ev = detect_events(traj)
        return SimulateOut(
            greedy_user=ev.greedy_user,
            ramp_speed=traj.ramp_speed,
            n_samples=len(traj),
            events={
                "first_r1_decode": ev.first_r1_decode,
                "first_r2_decode": ev.first_r2_decode,
                "greedy_switch": ev.greedy_switch,
                "sic_loss": ev.sic_loss,
                "ramp_jump": ev.ramp_jump,
            },
            steady_average=time_average(traj, window=cfg.n_periods),
            e_sum_closed_form=analysis.expected_rates(sym).e_sum,
        )

    return app


app = create_app()
