"""Command-line interface.

Subcommands:
  exact   --a 6,9,20 --s 0..5            exact s-Frobenius numbers
  bounds  --a 6,9,20 --s 3 [--historical] [--rho 2]
  count   --a 3,4,5 --t 1..100           exact counts next to count bounds
  verify  --suite path.txt [--smax 10]   full pipeline over a suite file
  sweep   --n 4 --amax 50 --count 100 --smax 10 --seed 42 --out report.json

Exit codes: 0 ok, 1 asserted violation, 2 config error, 3 resource cap on
a required computation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds as B
from .errors import CeilingTooLarge, ConfigError, EnumerationBudgetExceeded, SFrobError
from .exact import denumerant_table, s_frobenius_exact
from .harness import (
    CURATED_SUITE,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_RESOURCE,
    SweepConfig,
    load_suite,
    report_csv,
    report_json,
    run_sweep,
    run_verify,
)
from .instance import validate_tuple
from .intervals import DEFAULT_PREC, working_precision


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad tuple {text!r}") from exc


def _parse_range(text: str) -> range:
    """'3' -> range(3, 4); '0..5' -> range(0, 6)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _fmt_ev(ev: B.BoundEvaluation) -> str:
    val = "-"
    if ev.value is not None:
        lo, hi = ev.value.endpoints_str(12)
        val = f"[{lo}, {hi}]"
    line = (
        f"{ev.bound_id.value:32s} {ev.direction.value:13s} "
        f"applicable={ev.applicable.value:13s} value={val}"
    )
    if ev.reason:
        line += f"  ({ev.reason})"
    return line


def _cmd_exact(args) -> int:
    inst = validate_tuple(_parse_tuple(args.a))
    with working_precision(DEFAULT_PREC):
        certs = B.build_certificates(inst)
    table = None
    srange = _parse_range(args.s)
    ceiling_hi = B.certified_ceiling(inst, srange[-1], certs)
    try:
        table = denumerant_table(inst, ceiling_hi, cell_cap=args.cell_cap)
    except CeilingTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    for s in srange:
        ceil_s = B.certified_ceiling(inst, s, certs)
        g = s_frobenius_exact(inst, s, ceil_s, table=table)
        print(f"s={s} g={g if g is not None else 'none'}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    inst = validate_tuple(_parse_tuple(args.a))
    rho = Fraction(args.rho)
    with working_precision(DEFAULT_PREC):
        certs = B.build_certificates(inst)
        consts = B.constants(inst.n)
        from .geometry import kissing_data

        tau = kissing_data(inst.n - 1).proven_lower
        for s in _parse_range(args.s):
            print(f"# tuple={inst} s={s}  lambdaSq={list(certs.minima.lambda_sq)} "
                  f"detSq={certs.lattice.det_sq} WR={certs.well_rounded}")
            evs = []
            if inst.n >= 3:
                evs.append(B.upper_main(inst, s, certs.r_upper))
            evs.append(B.upper_kissing(inst, s, certs.r_upper, tau))
            evs.append(B.upper_beta(inst, s, certs.r_upper))
            evs.append(B.lower_simple(inst, s, certs.lambda_top))
            if inst.n >= 3:
                evs.append(B.lower_rho(inst, s, rho, certs.lambda_top, consts))
                evs.append(B.lower_widmer(
                    inst, s, certs.r_lower, certs.r_upper, certs.lambda_top))
            evs.append(B.rodseth_report(inst))
            if args.historical:
                evs.append(B.historical_lower_simple(inst, s))
                if inst.n >= 3:
                    evs.append(B.historical_lower_rho(
                        inst, s, rho, certs.lambda_top, consts))
            for ev in evs:
                print(_fmt_ev(ev))
    return EXIT_OK


def _cmd_count(args) -> int:
    inst = validate_tuple(_parse_tuple(args.a))
    trange = _parse_range(args.t)
    with working_precision(DEFAULT_PREC):
        certs = B.build_certificates(inst)
        consts = B.constants(inst.n)
    try:
        table = denumerant_table(inst, trange[-1], cell_cap=args.cell_cap)
    except CeilingTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    for t in trange:
        if t < 1:
            continue
        with working_precision(DEFAULT_PREC):
            evs = B.count_bounds(
                inst, t, certs.r_lower, certs.r_upper, certs.lambda_top,
                certs.minima, consts,
            )
            if args.historical:
                evs.append(B.historical_count_upper_blichfeldt(inst, t))
                if inst.n >= 3:
                    evs.append(B.historical_count_upper_lemma31(
                        inst, t, certs.lambda_top, consts))
        parts = [f"t={t}", f"G={table.count(t)}"]
        for ev in evs:
            if ev.value is None:
                parts.append(f"{ev.bound_id.value}=NA")
            else:
                lo, hi = ev.value.endpoints_str(10)
                parts.append(f"{ev.bound_id.value}=[{lo},{hi}]")
        print(" ".join(parts))
    return EXIT_OK


def _cmd_verify(args) -> int:
    tuples = list(CURATED_SUITE) if args.suite is None else load_suite(args.suite)
    report, code = run_verify(
        tuples, smax=args.smax, count_t_max=args.count_t_max,
        workers=args.workers, include_timings=args.timings,
    )
    text = report_csv(report) if args.fmt == "csv" else report_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summ = report["summary"]
    print(
        f"verify: {summ['rowCount']} rows, "
        f"{summ['assertedViolations']} asserted violations, "
        f"{summ['reportedViolations']} reported-only violations",
        file=sys.stderr,
    )
    return code


def _cmd_sweep(args) -> int:
    config = SweepConfig(
        n=args.n, amax=args.amax, tuple_count=args.count, smax=args.smax,
        seed=args.seed, fmt=args.fmt, output_path=args.out,
        count_t_max=args.count_t_max, workers=args.workers,
        include_timings=args.timings,
    )
    report, code = run_sweep(config)
    text = report_csv(report) if config.fmt == "csv" else report_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sfrob",
        description="Exact s-Frobenius numbers and certified bound verification",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    pe = sub.add_parser("exact", help="exact g_s values")
    pe.add_argument("--a", required=True, help="comma-separated tuple, e.g. 6,9,20")
    pe.add_argument("--s", required=True, help="s or range, e.g. 3 or 0..5")
    pe.add_argument("--cell-cap", type=int, default=10 ** 8)
    pe.set_defaults(fn=_cmd_exact)

    pb = sub.add_parser("bounds", help="evaluate all g_s bounds")
    pb.add_argument("--a", required=True)
    pb.add_argument("--s", required=True)
    pb.add_argument("--rho", default="2", help="rho > 1 for the rho-form lower bound")
    pb.add_argument("--historical", action="store_true",
                    help="include erratum-affected published forms")
    pb.set_defaults(fn=_cmd_bounds)

    pc = sub.add_parser("count", help="exact counts and count bounds")
    pc.add_argument("--a", required=True)
    pc.add_argument("--t", required=True, help="t or range, e.g. 1..100")
    pc.add_argument("--historical", action="store_true")
    pc.add_argument("--cell-cap", type=int, default=10 ** 8)
    pc.set_defaults(fn=_cmd_count)

    pv = sub.add_parser("verify", help="verify bounds on a suite")
    pv.add_argument("--suite", help="file with one tuple per line ('#' comments); "
                                    "defaults to the curated suite")
    pv.add_argument("--smax", type=int, default=10)
    pv.add_argument("--count-t-max", type=int, default=200)
    pv.add_argument("--workers", type=int, default=1)
    pv.add_argument("--fmt", choices=("json", "csv"), default="json")
    pv.add_argument("--out")
    pv.add_argument("--timings", action="store_true")
    pv.set_defaults(fn=_cmd_verify)

    ps = sub.add_parser("sweep", help="randomized verification sweep")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--amax", type=int, required=True)
    ps.add_argument("--count", type=int, required=True)
    ps.add_argument("--smax", type=int, default=10)
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--out")
    ps.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    ps.add_argument("--count-t-max", type=int, default=200)
    ps.add_argument("--workers", type=int, default=1)
    ps.add_argument("--timings", action="store_true")
    ps.set_defaults(fn=_cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (CeilingTooLarge, EnumerationBudgetExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SFrobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
