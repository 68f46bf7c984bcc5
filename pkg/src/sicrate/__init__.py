"""Rate-power allocation for the two-user interference channel with
successive interference cancellation: closed-form solvers, a decentralized
rate-oscillation simulator, brute-force verification, a CLI, and an HTTP
service."""

from .analysis import (
    ComparisonRow,
    ExpectedRates,
    benchmark_greedy,
    benchmark_orthogonal,
    comparison_row,
    efficiency_osc,
    expected_rates,
    sweep,
    t_double_prime,
    t_prime,
)
from .centralized import (
    Allocation,
    Strategy,
    allocation_violation,
    check_proposition1,
    check_proposition2_conditions,
    single_tx_gap_omega,
    solve_full_sic,
    solve_global,
    solve_no_sic,
    solve_partial_sic,
    threshold_kt,
)
from .channel import (
    ChannelGains,
    SymmetricChannel,
    can_decode,
    capacity_sic,
    capacity_with_interference,
    phi,
)
from .oracle import GridSpec, grid_optimize, grid_optimize_global, time_average
from .sim import (
    SimConfig,
    TraceEvents,
    Trajectory,
    detect_events,
    greedy_r1,
    run_init_phase,
    run_steady_state,
    sawtooth_r2,
    simulate,
)
from .symmetric import (
    Landmarks,
    classify_region,
    diagonal_intersection_q,
    landmarks,
    sum_rate_no_sic,
    sum_rate_partial_I,
    sum_rate_partial_II,
    switching_curve_mu,
    symmetric_optimum,
)

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "ChannelGains",
    "ComparisonRow",
    "ExpectedRates",
    "GridSpec",
    "Landmarks",
    "SimConfig",
    "Strategy",
    "SymmetricChannel",
    "TraceEvents",
    "Trajectory",
    "allocation_violation",
    "benchmark_greedy",
    "benchmark_orthogonal",
    "can_decode",
    "capacity_sic",
    "capacity_with_interference",
    "check_proposition1",
    "check_proposition2_conditions",
    "classify_region",
    "comparison_row",
    "detect_events",
    "diagonal_intersection_q",
    "efficiency_osc",
    "expected_rates",
    "greedy_r1",
    "grid_optimize",
    "grid_optimize_global",
    "landmarks",
    "phi",
    "run_init_phase",
    "run_steady_state",
    "sawtooth_r2",
    "simulate",
    "single_tx_gap_omega",
    "solve_full_sic",
    "solve_global",
    "solve_no_sic",
    "solve_partial_sic",
    "sum_rate_no_sic",
    "sum_rate_partial_I",
    "sum_rate_partial_II",
    "sweep",
    "switching_curve_mu",
    "symmetric_optimum",
    "t_double_prime",
    "t_prime",
    "threshold_kt",
    "time_average",
]
