"""Command-line interface.

Subcommands solve single instances, dump region / efficiency / comparison
datasets as CSV, trace the oscillation algorithm, run the randomized
verification suites, and launch the HTTP service.  All computation runs
in-process; CSV output is byte-deterministic for identical flags (fixed row
order, shortest round-trip float formatting).

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import analysis, verify
from .centralized import Strategy, solve_global
from .channel import ChannelGains, SymmetricChannel
from .sim import SimConfig, detect_events, simulate
from .symmetric import classify_region, diagonal_intersection_q

STRATEGY_LABELS = {
    Strategy.NO_SIC: "No-SIC",
    Strategy.PARTIAL_SIC_R1: "Partial-SIC (R1 cancels)",
    Strategy.PARTIAL_SIC_R2: "Partial-SIC (R2 cancels)",
    Strategy.FULL_SIC: "Full-SIC",
}


def _fmt(x: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    return repr(float(x))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sicrate",
        description="Rate-power allocation and rate-oscillation tools for the "
        "two-user interference channel with successive interference cancellation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="best allocation for one channel instance")
    solve.add_argument("--epsilon", type=float, help="symmetric channel margin for the R1 cross link")
    solve.add_argument("--mu", type=float, help="symmetric channel margin for the R2 cross link")
    solve.add_argument("--gamma", type=float, help="shared peak SNR of the symmetric channel")
    solve.add_argument("--g11", type=float, help="path gain T1 to R1")
    solve.add_argument("--g12", type=float, help="path gain T1 to R2")
    solve.add_argument("--g21", type=float, help="path gain T2 to R1")
    solve.add_argument("--g22", type=float, help="path gain T2 to R2")
    solve.add_argument("--gamma1-max", type=float, help="peak SNR of transmitter 1")
    solve.add_argument("--gamma2-max", type=float, help="peak SNR of transmitter 2")

    regions = sub.add_parser("regions", help="optimal-strategy map over the margin grid (CSV)")
    regions.add_argument("--gamma", type=float, required=True)
    regions.add_argument("--step", type=float, default=0.01, help="margin grid step (default 0.01)")
    regions.add_argument("--out", required=True, help="output CSV path")

    trace = sub.add_parser("trace", help="simulate the oscillation algorithm (CSV + event times)")
    trace.add_argument("--epsilon", type=float, required=True)
    trace.add_argument("--mu", type=float, required=True)
    trace.add_argument("--gamma", type=float, required=True)
    trace.add_argument("--period", type=float, default=1.0, help="sawtooth period in seconds")
    trace.add_argument("--dt", type=float, default=None, help="time step (default period/1000)")
    trace.add_argument("--n-periods", type=int, default=10, help="steady-state periods to simulate")
    trace.add_argument("--include-init", action=argparse.BooleanOptionalAction, default=True,
                       help="simulate the role-discovery descent first")
    trace.add_argument("--out", required=True, help="output CSV path")

    surface = sub.add_parser("surface", help="oscillation efficiency over the margin grid (CSV)")
    surface.add_argument("--gamma", type=float, required=True)
    surface.add_argument("--step", type=float, default=0.01)
    surface.add_argument("--out", required=True)

    compare = sub.add_parser("compare", help="oscillation vs greedy vs orthogonal at fixed mu (CSV)")
    compare.add_argument("--gamma", type=float, required=True)
    compare.add_argument("--mu", type=float, required=True)
    compare.add_argument("--step", type=float, default=0.01)
    compare.add_argument("--out", required=True)

    ver = sub.add_parser("verify", help="randomized closed-form vs brute-force verification")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--instances", type=int, default=200)
    ver.add_argument("--grid-points", type=int, default=201)
    ver.add_argument("--sim-tol-factor", type=float, default=5.0, help=argparse.SUPPRESS)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return p


def _gains_from_args(args: argparse.Namespace) -> ChannelGains:
    symmetric = [args.epsilon, args.mu, args.gamma]
    general = [args.g11, args.g12, args.g21, args.g22, args.gamma1_max, args.gamma2_max]
    if any(v is not None for v in symmetric):
        if any(v is None for v in symmetric):
            raise ValueError("symmetric form needs --epsilon, --mu and --gamma together")
        if any(v is not None for v in general):
            raise ValueError("give either the symmetric flags or the gain flags, not both")
        return SymmetricChannel(args.epsilon, args.mu, args.gamma).to_gains()
    if any(v is None for v in general):
        raise ValueError(
            "general form needs --g11 --g12 --g21 --g22 --gamma1-max --gamma2-max"
        )
    return ChannelGains(args.g11, args.g12, args.g21, args.g22,
                        args.gamma1_max, args.gamma2_max)


def cmd_solve(args: argparse.Namespace) -> int:
    alloc = solve_global(_gains_from_args(args))
    print(f"strategy: {STRATEGY_LABELS[alloc.strategy]}")
    print(f"gamma1: {_fmt(alloc.gamma1)}")
    print(f"gamma2: {_fmt(alloc.gamma2)}")
    print(f"r1: {_fmt(alloc.r1)}")
    print(f"r2: {_fmt(alloc.r2)}")
    print(f"sum_rate: {_fmt(alloc.sum_rate)}")
    return 0


def cmd_regions(args: argparse.Namespace) -> int:
    points = analysis.margin_grid(args.step)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["epsilon", "mu", "strategy", "r_ns", "r_pi", "r_pii"])
        for eps in points:
            for mu in points:
                sym = SymmetricChannel(eps, mu, args.gamma)
                w.writerow([
                    _fmt(eps), _fmt(mu), classify_region(sym).value,
                    _fmt(analysis.sum_rate_no_sic(sym)),
                    _fmt(analysis.sum_rate_partial_I(sym)),
                    _fmt(analysis.sum_rate_partial_II(sym)),
                ])
    print(f"q({_fmt(args.gamma)}) = {_fmt(diagonal_intersection_q(args.gamma))}")
    print(f"wrote {len(points) ** 2} rows to {args.out}")
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    cfg = SimConfig(
        sym=SymmetricChannel(args.epsilon, args.mu, args.gamma),
        period=args.period,
        dt=args.dt,
        n_periods=args.n_periods,
        include_init=args.include_init,
    )
    traj = simulate(cfg)
    phases = traj.phase_labels()
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "r1", "r2", "r1_decoded", "r2_decoded", "sic_at_R1", "phase"])
        for k in range(len(traj)):
            w.writerow([
                _fmt(traj.t[k]), _fmt(traj.r1[k]), _fmt(traj.r2[k]),
                int(traj.r1_decoded[k]), int(traj.r2_decoded[k]),
                int(traj.sic_at_r1[k]), phases[k],
            ])
    ev = detect_events(traj)
    print("events (s):")
    print(f"  first_r2_decode: {_fmt_event(ev.first_r2_decode)}")
    print(f"  first_r1_decode: {_fmt_event(ev.first_r1_decode)}")
    print(f"  t{ev.greedy_user}_switch: {_fmt_event(ev.greedy_switch)}")
    print(f"  sic_loss: {_fmt_event(ev.sic_loss)}")
    print(f"  ramp_to_ws2_jump: {_fmt_event(ev.ramp_jump)}")
    print(f"wrote {len(traj)} rows to {args.out}")
    return 0


def _fmt_event(t: float | None) -> str:
    return "n/a" if t is None else f"{t:.3f}"


def cmd_surface(args: argparse.Namespace) -> int:
    rows = analysis.sweep(args.gamma, args.step)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["epsilon", "mu", "e_sum", "r_opt", "rho_osc"])
        for row in rows:
            w.writerow([
                _fmt(row.epsilon), _fmt(row.mu), _fmt(row.e_osc),
                _fmt(row.r_opt), _fmt(row.rho_osc),
            ])
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    rows = analysis.sweep(args.gamma, args.step, mu_fixed=args.mu)
    labels = []
    for row in rows:
        strategy = classify_region(SymmetricChannel(row.epsilon, row.mu, row.gamma))
        labels.append("NoSic" if strategy is Strategy.NO_SIC else "PartialSic")
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["epsilon", "rho_osc", "rho_greedy", "rho_orth", "region"])
        for row, label in zip(rows, labels):
            w.writerow([
                _fmt(row.epsilon), _fmt(row.rho_osc), _fmt(row.rho_greedy),
                _fmt(row.rho_orth), label,
            ])
    transitions = [
        rows[k].epsilon for k in range(1, len(labels)) if labels[k] != labels[k - 1]
    ]
    if transitions:
        joined = ", ".join(_fmt(e) for e in transitions)
        print(f"region transition at epsilon = {joined}")
    else:
        print("no region transition in the sweep range")
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.instances < 0:
        raise ValueError(f"--instances must be >= 0, got {args.instances}")
    if args.instances == 0:
        print("warning: 0 instances requested, all checks are vacuous")
        print("solver-vs-oracle: passed 0/0")
        print("theorem-vs-sim: passed 0/0")
        print("propositions: passed 0/0")
        return 0
    results = verify.run_verification(
        seed=args.seed,
        instances=args.instances,
        grid_points=args.grid_points,
        sim_tol_factor=args.sim_tol_factor,
    )
    all_ok = True
    for res in results:
        total = res.passed + res.failed
        print(f"{res.name}: passed {res.passed}/{total}")
        for detail in res.details:
            print(f"  FAIL {detail}")
        all_ok = all_ok and res.ok
    return 0 if all_ok else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "solve": cmd_solve,
    "regions": cmd_regions,
    "trace": cmd_trace,
    "surface": cmd_surface,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
