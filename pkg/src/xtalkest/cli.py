"""Command-line interface: Monte-Carlo sweeps, single seeded instances,
and an invariant self-test."""

import argparse
import sys

import numpy as np

from .channel import ChannelConfig, generate_channels
from .estimator import estimate_joint_ml, estimate_joint_ml_block, estimate_sequential
from .evaluation import SweepConfig, run_sweep, sinr_after_cancellation, sweep_to_csv
from .simulator import build_error_vector, error_vector_matrix_form, generate_legacy_data
from .training import build_training, projection_q

# Defaults reproduce the reference scenario: 4 vectored interferers 6 dB
# below the direct path, legacy lines 10 or 15 dB below, 30 dB
# crosstalk-free SNR, code lengths 4..64.
DEFAULT_M = [4, 8, 16, 32, 64]
DEFAULT_P = 4
DEFAULT_N = [1, 4, 10]
DEFAULT_VECTORED_DB = 6.0
DEFAULT_LEGACY_DB = [10.0, 15.0]
DEFAULT_SNR_DB = 30.0
DEFAULT_TRIALS = 200
DEFAULT_SEED = 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xtalkest",
        description="Crosstalk channel estimation simulator for mixed "
                    "legacy/vectored DSL lines.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, multi):
        if multi:
            sp.add_argument("--m", type=int, action="append",
                            help="training code length, repeatable (default 4 8 16 32 64)")
            sp.add_argument("--n", type=int, action="append",
                            help="legacy line count, repeatable (default 1 4 10)")
            sp.add_argument("--legacy-db", type=float, action="append",
                            help="legacy coupling dB below direct path, repeatable (default 10 15)")
        else:
            sp.add_argument("--m", type=int, default=32, help="training code length")
            sp.add_argument("--n", type=int, default=4, help="legacy line count")
            sp.add_argument("--legacy-db", type=float, default=DEFAULT_LEGACY_DB[1],
                            help="legacy coupling dB below direct path")
        sp.add_argument("--p", type=int, default=DEFAULT_P, help="vectored interferer count")
        sp.add_argument("--vectored-db", type=float, default=DEFAULT_VECTORED_DB,
                        help="vectored coupling dB below direct path")
        sp.add_argument("--snr-db", type=float, default=DEFAULT_SNR_DB,
                        help="crosstalk-free receiver SNR in dB")
        sp.add_argument("--spread-db", type=float, default=0.0,
                        help="log-uniform coupling magnitude spread in dB")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")

    sweep = sub.add_parser("sweep", help="run the Monte-Carlo SINR sweep, emit CSV")
    common(sweep, multi=True)
    sweep.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                       help="Monte-Carlo trials per grid point")
    sweep.add_argument("--out", help="output CSV path (default stdout)")

    single = sub.add_parser("single", help="one seeded instance: truth vs estimates")
    common(single, multi=False)

    selftest = sub.add_parser("selftest", help="run the invariant suite")
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")
    return parser


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    if args.subcommand == "sweep":
        return _cmd_sweep(args)
    if args.subcommand == "single":
        return _cmd_single(args)
    return _cmd_selftest(args)


def _cmd_sweep(args):
    cfg = SweepConfig(
        m_values=tuple(args.m or DEFAULT_M),
        p=args.p,
        n_values=tuple(args.n or DEFAULT_N),
        vectored_xtalk_db=args.vectored_db,
        legacy_xtalk_db_values=tuple(args.legacy_db or DEFAULT_LEGACY_DB),
        snr_db=args.snr_db,
        trials=args.trials,
        master_seed=args.seed,
        magnitude_spread_db=args.spread_db,
    )
    csv = sweep_to_csv(run_sweep(cfg))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def _cmd_single(args):
    rng = np.random.default_rng(args.seed)
    ccfg = ChannelConfig(p=args.p, n=args.n, vectored_xtalk_db=args.vectored_db,
                         legacy_xtalk_db=args.legacy_db, snr_db=args.snr_db,
                         magnitude_spread_db=args.spread_db)
    ch = generate_channels(ccfg, rng)
    ts = build_training(args.m, args.p, rng)
    L = generate_legacy_data(args.m, args.n, rng)
    e0 = build_error_vector(ts, L, ch, rng)
    est = estimate_sequential(ts, L, e0)

    def fmt(v):
        return "  ".join(f"{c.real:+.6f}{c.imag:+.6f}j" for c in v) or "(none)"

    print(f"m={args.m} p={args.p} n={args.n} seed={args.seed}")
    print(f"vectored true : {fmt(ch.h0v)}")
    print(f"vectored est  : {fmt(est.h0v_hat)}")
    print(f"legacy true   : {fmt(ch.h0l)}")
    print(f"legacy est    : {fmt(est.h0l_hat)}")
    print(f"legacy rank   : {est.legacy_rank}"
          + (" (rank deficient)" if est.rank_deficient else ""))
    print(f"SINR          : {sinr_after_cancellation(ch, est):.4f} dB")
    return 0


def _cmd_selftest(args):
    checks = run_selftest(args.seed)
    failed = 0
    for name, ok, detail in checks:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        failed += not ok
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def run_selftest(seed):
    """Invariant suite: training identities, simulator path equivalence,
    sequential/joint equivalence. Returns [(name, ok, detail)]."""
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    ok = True
    for m in (2, 4, 8, 16, 32, 64):
        for p in (1, m // 2, m):
            ts = build_training(m, p, rng)
            Vh = ts.V.conj().T
            ok &= np.array_equal(Vh @ ts.V, 2 * m * np.eye(p))
            ok &= not np.any(ts.U.T @ ts.V)
            ok &= np.array_equal(ts.U @ ts.U.T + ts.W @ ts.W.T, m * np.eye(m))
            worst = max(worst, np.max(np.abs(projection_q(ts) - ts.U @ ts.U.T / m)))
    ok &= worst <= 1e-12
    checks.append(("training identities", bool(ok),
                   f"grid m in 2..64, projection gap {worst:.2e}"))

    worst = 0.0
    for _ in range(100):
        m, p, n = 16, 4, rng.integers(0, 9)
        ccfg = ChannelConfig(p=p, n=int(n), vectored_xtalk_db=6.0,
                             legacy_xtalk_db=10.0, snr_db=30.0)
        inst_seed = rng.integers(0, 2**63)
        ch = generate_channels(ccfg, np.random.default_rng(inst_seed))
        ts = build_training(m, p, np.random.default_rng(inst_seed + 1))
        L = generate_legacy_data(m, int(n), np.random.default_rng(inst_seed + 2))
        a = build_error_vector(ts, L, ch, np.random.default_rng(inst_seed + 3))
        b = error_vector_matrix_form(ts, L, ch, np.random.default_rng(inst_seed + 3))
        worst = max(worst, np.max(np.abs(a.e0 - b.e0)))
    checks.append(("simulator path equivalence", worst <= 1e-12,
                   f"100 instances, max gap {worst:.2e}"))

    worst = 0.0
    for _ in range(100):
        m = int(rng.choice([8, 16, 32, 64]))
        p = int(rng.integers(1, 5))
        n = int(rng.integers(0, min(m - p, 10) + 1))
        ccfg = ChannelConfig(p=p, n=n, vectored_xtalk_db=6.0,
                             legacy_xtalk_db=15.0, snr_db=30.0)
        ch = generate_channels(ccfg, rng)
        ts = build_training(m, p, rng)
        L = generate_legacy_data(m, n, rng)
        e0 = build_error_vector(ts, L, ch, rng)
        seq = estimate_sequential(ts, L, e0)
        joint = estimate_joint_ml(ts, L, e0)
        block = estimate_joint_ml_block(ts, L, e0)
        for est in (joint, block):
            worst = max(worst,
                        np.max(np.abs(seq.h0v_hat - est.h0v_hat), initial=0.0),
                        np.max(np.abs(seq.h0l_hat - est.h0l_hat), initial=0.0))
    checks.append(("sequential/joint equivalence", worst <= 1e-9,
                   f"100 full-rank instances, max gap {worst:.2e}"))
    return checks


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
