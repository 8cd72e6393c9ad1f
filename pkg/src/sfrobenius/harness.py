"""Verification pipeline: suites, random sweeps, reports, exit codes.

For each tuple the pipeline builds the lattice certificates, certifies a
scan ceiling at the largest requested s, fills one denumerant table, and
then for every s records the exact g_s next to every bound evaluation
with a satisfied verdict. Count-function bounds are checked against the
table on t = 1..countTMax per tuple.

Asserted vs reported: all corrected-appendix theorems are asserted and
any violation drives the exit code to 1. Inequalities the paper leaves
shaky are recorded but never asserted: the kissing-window bound at
N = 2 (violated at the window edge, e.g. (2,3) at s = 3) and the
Rodseth comparison (fails literally on small instances). Rows are never
filtered; a satisfied=no row on a reported bound keeps exit code 0.

Reports are deterministic: rows are pure functions of the input tuple,
assembled in input order, with interval endpoints printed at a fixed
precision, so a fixed seed yields byte-identical bytes at any worker
count. Timings are therefore emitted only on request.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import bounds as B
from .bounds import Applicability, BoundEvaluation, Direction
from .errors import CeilingTooLarge, ConfigError, EnumerationBudgetExceeded, ExhaustedSampling
from .exact import DEFAULT_CELL_CAP, denumerant_table, s_frobenius_exact
from .instance import FrobeniusInstance, reduce_tuple, validate_tuple
from .intervals import DEFAULT_PREC, working_precision
from .lattice import DEFAULT_NODE_CAP
from .geometry import kissing_data

VERSION = "0.1.0"
PRNG_NAME = "mersenne-twister (CPython random.Random, randrange draws)"
INTERVAL_DIGITS = 17

CURATED_SUITE: tuple[tuple[int, ...], ...] = (
    (2, 3), (3, 5), (3, 4, 5), (6, 9, 20), (7, 11, 13), (5, 7, 9, 11),
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class SweepConfig:
    n: int
    amax: int
    tuple_count: int
    smax: int
    seed: int
    table_cell_cap: int = DEFAULT_CELL_CAP
    enum_node_cap: int = DEFAULT_NODE_CAP
    output_path: Optional[str] = None
    fmt: str = "json"
    count_t_max: int = 200
    rho: Fraction = Fraction(2)
    workers: int = 1
    include_timings: bool = False

    def validate(self) -> None:
        if self.n < 2:
            raise ConfigError("need N >= 2")
        if self.amax < self.n + 1:
            raise ConfigError(
                f"amax = {self.amax} cannot hold {self.n} distinct entries >= 2"
            )
        if self.tuple_count < 1:
            raise ConfigError("tuple count must be >= 1")
        if self.smax < 0:
            raise ConfigError("smax must be >= 0")
        if self.fmt not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


def random_tuples(
    n: int, amax: int, count: int, seed: int
) -> list[FrobeniusInstance]:
    """Deterministic sample of reduced coprime instances.

    Uniform over strictly increasing coprime n-tuples from [2, amax]
    (iid draws conditioned on distinctness), then reduced; reduced
    instances may have fewer than n entries.
    """
    if amax < n + 1:
        raise ConfigError(f"amax = {amax} cannot hold {n} distinct entries >= 2")
    rng = random.Random(seed)
    out: list[FrobeniusInstance] = []
    failures = 0
    while len(out) < count:
        draw = [rng.randrange(2, amax + 1) for _ in range(n)]
        if len(set(draw)) != n:
            failures += 1
        else:
            if math.gcd(*draw) != 1:
                failures += 1
            else:
                inst = reduce_tuple(validate_tuple(draw))
                if inst.n < 2:  # unreachable; reduce_tuple guards
                    failures += 1
                else:
                    out.append(inst)
                    failures = 0
                    continue
        if failures > 10 ** 4:
            raise ExhaustedSampling(
                f"{failures} consecutive rejections drawing from [2, {amax}]"
            )
    return out


# ---------------------------------------------------------------------------
# per-row evaluation
# ---------------------------------------------------------------------------

def _gs_bound_set(inst, s, certs, consts, rho):
    """(evaluation, asserted) pairs for one (tuple, s)."""
    n = inst.n
    out: list[tuple[BoundEvaluation, bool]] = []
    tau = kissing_data(n - 1).proven_lower
    if n >= 3:
        out.append((B.upper_main(inst, s, certs.r_upper), True))
        out.append((B.upper_kissing(inst, s, certs.r_upper, tau), True))
    else:
        # window edge is violated at N = 2 (see module docstring): report only
        out.append((B.upper_kissing(inst, s, certs.r_upper, tau), False))
    out.append((B.upper_beta(inst, s, certs.r_upper), True))
    out.append((B.lower_simple(inst, s, certs.lambda_top), True))
    if n >= 3:
        out.append((B.lower_rho(inst, s, rho, certs.lambda_top, consts), True))
        out.append((
            B.lower_widmer(inst, s, certs.r_lower, certs.r_upper, certs.lambda_top),
            True,
        ))
    if s == 0:
        out.append((B.rodseth_report(inst), False))
    return out


def _gs_satisfied(ev: BoundEvaluation, g: Optional[int]) -> str:
    if ev.applicable is not Applicability.YES:
        return "NA"
    if g is None:
        return "NA"
    if ev.direction is Direction.UPPER_ON_GS:
        return "yes" if g <= ev.value.hi else "no"
    if ev.direction is Direction.LOWER_ON_GS:
        return "yes" if g >= ev.value.lo else "no"
    return "NA"


def _count_satisfied(ev: BoundEvaluation, count: int) -> str:
    if ev.applicable is not Applicability.YES:
        return "NA"
    if ev.direction is Direction.LOWER_ON_COUNT:
        return "yes" if count >= ev.value.lo else "no"
    return "yes" if count <= ev.value.hi else "no"


def _ev_dict(ev: BoundEvaluation, asserted: bool, satisfied: str) -> dict:
    d = {
        "boundId": ev.bound_id.value,
        "direction": ev.direction.value,
        "applicable": ev.applicable.value,
        "asserted": asserted,
        "satisfied": satisfied,
    }
    if ev.value is not None:
        lo, hi = ev.value.endpoints_str(INTERVAL_DIGITS)
        d["lo"], d["hi"] = lo, hi
    if ev.reason:
        d["reason"] = ev.reason
    return d


def _analyze_tuple(
    inst: FrobeniusInstance,
    smax: int,
    *,
    cell_cap: int = DEFAULT_CELL_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
    count_t_max: int = 200,
    rho: Fraction = Fraction(2),
    include_timings: bool = False,
) -> dict:
    """All rows and count checks for a single tuple. Pure in its inputs."""
    stamps = {}
    t0 = time.perf_counter()

    def stamp(name):
        nonlocal t0
        t1 = time.perf_counter()
        stamps[name] = round((t1 - t0) * 1000.0, 3)
        t0 = t1

    try:
        with working_precision(DEFAULT_PREC):
            certs = B.build_certificates(inst, node_cap=node_cap)
            consts = B.constants(inst.n)
            ceilings = [B.certified_ceiling(inst, s, certs) for s in range(smax + 1)]
    except EnumerationBudgetExceeded as exc:
        return {
            "tuple": list(inst.a), "skipped": True, "skipReason": str(exc),
            "lattice": None, "rows": [], "countCheck": None,
        }
    stamp("latticeMs")

    lat_summary = {
        "lambdaSq": list(certs.minima.lambda_sq),
        "detSq": certs.lattice.det_sq,
        "wellRounded": certs.well_rounded,
        "rLo": certs.r_lower.endpoints_str(INTERVAL_DIGITS)[0],
        "rHi": certs.r_upper.endpoints_str(INTERVAL_DIGITS)[1],
    }

    try:
        table = denumerant_table(inst, ceilings[-1], cell_cap=cell_cap)
    except CeilingTooLarge as exc:
        return {
            "tuple": list(inst.a),
            "skipped": True,
            "skipReason": str(exc),
            "lattice": lat_summary,
            "rows": [],
            "countCheck": None,
        }
    stamp("tableMs")

    rows = []
    for s in range(smax + 1):
        g = s_frobenius_exact(inst, s, ceilings[s], table=table)
        with working_precision(DEFAULT_PREC):
            evs = _gs_bound_set(inst, s, certs, consts, rho)
        if any(ev.applicable is Applicability.INDETERMINATE for ev, _ in evs):
            # one retry with certificates rebuilt at doubled precision
            with working_precision(2 * DEFAULT_PREC):
                certs2 = B.build_certificates(inst, node_cap=node_cap)
                consts2 = B.constants(inst.n)
                evs = _gs_bound_set(inst, s, certs2, consts2, rho)
        rows.append({
            "tuple": list(inst.a),
            "s": s,
            "gExact": g if g is not None else "none",
            "ceiling": ceilings[s],
            "lattice": lat_summary,
            "bounds": [
                _ev_dict(ev, asserted, _gs_satisfied(ev, g)) for ev, asserted in evs
            ],
        })
    stamp("scanMs")

    t_hi = min(count_t_max, table.ceiling)
    agg: dict[str, dict] = {}
    for t in range(1, t_hi + 1):
        with working_precision(DEFAULT_PREC):
            cevs = B.count_bounds(
                inst, t, certs.r_lower, certs.r_upper, certs.lambda_top,
                certs.minima, consts,
            )
        gt = table.count(t)
        for ev in cevs:
            slot = agg.setdefault(ev.bound_id.value, {
                "boundId": ev.bound_id.value,
                "asserted": True,
                "checked": 0,
                "violations": 0,
                "firstViolationT": None,
            })
            if ev.applicable is Applicability.YES:
                slot["checked"] += 1
                if _count_satisfied(ev, gt) == "no":
                    slot["violations"] += 1
                    if slot["firstViolationT"] is None:
                        slot["firstViolationT"] = t
    count_check = {
        "tuple": list(inst.a),
        "tMax": t_hi,
        "results": [agg[k] for k in sorted(agg)],
    }
    stamp("countMs")

    out = {
        "tuple": list(inst.a),
        "skipped": False,
        "lattice": lat_summary,
        "rows": rows,
        "countCheck": count_check,
    }
    if include_timings:
        out["timingsMs"] = stamps
    return out


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------

def _assemble(
    instances: list[FrobeniusInstance],
    smax: int,
    header: dict,
    *,
    workers: int = 1,
    **kw,
) -> tuple[dict, int]:
    def work(inst):
        return _analyze_tuple(inst, smax, **kw)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            analyses = list(pool.map(work, instances))
    else:
        analyses = [work(inst) for inst in instances]

    rows = []
    count_checks = []
    skipped = []
    asserted_violations = 0
    reported_violations = 0
    for an in analyses:
        if an["skipped"]:
            skipped.append({"tuple": an["tuple"], "reason": an["skipReason"]})
            continue
        rows.extend(an["rows"])
        cc = an["countCheck"]
        count_checks.append(cc)
        for res in cc["results"]:
            asserted_violations += res["violations"]
        for row in an["rows"]:
            for b in row["bounds"]:
                if b["satisfied"] == "no":
                    if b["asserted"]:
                        asserted_violations += 1
                    else:
                        reported_violations += 1
    report = {
        "header": header,
        "rows": rows,
        "countChecks": count_checks,
        "skipped": skipped,
        "summary": {
            "assertedViolations": asserted_violations,
            "reportedViolations": reported_violations,
            "rowCount": len(rows),
        },
    }
    timings = [an.get("timingsMs") for an in analyses if an.get("timingsMs")]
    if timings:
        report["timings"] = timings
    code = EXIT_VIOLATION if asserted_violations else EXIT_OK
    return report, code


def _header(mode: str, *, seed=None, smax, count_t_max, caps, extra=None) -> dict:
    h = {
        "version": VERSION,
        "mode": mode,
        "seed": seed,
        "prng": PRNG_NAME if seed is not None else None,
        "caps": caps,
        "smax": smax,
        "countTMax": count_t_max,
        "intervalDigits": INTERVAL_DIGITS,
        "precisionBits": DEFAULT_PREC,
    }
    if extra:
        h.update(extra)
    return h


def run_verify(
    tuples: list[tuple[int, ...]],
    smax: int = 10,
    *,
    cell_cap: int = DEFAULT_CELL_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
    count_t_max: int = 200,
    rho: Fraction = Fraction(2),
    workers: int = 1,
    include_timings: bool = False,
) -> tuple[dict, int]:
    """Verify all bounds against exact values on explicit tuples."""
    instances = [validate_tuple(t) for t in tuples]
    header = _header(
        "verify", smax=smax, count_t_max=count_t_max,
        caps={"tableCells": cell_cap, "enumNodes": node_cap},
        extra={"rho": str(rho)},
    )
    return _assemble(
        instances, smax, header, workers=workers,
        cell_cap=cell_cap, node_cap=node_cap, count_t_max=count_t_max,
        rho=rho, include_timings=include_timings,
    )


def run_sweep(config: SweepConfig) -> tuple[dict, int]:
    """Randomized sweep per config; deterministic given the seed."""
    config.validate()
    instances = random_tuples(config.n, config.amax, config.tuple_count, config.seed)
    header = _header(
        "sweep", seed=config.seed, smax=config.smax,
        count_t_max=config.count_t_max,
        caps={"tableCells": config.table_cell_cap, "enumNodes": config.enum_node_cap},
        extra={
            "rho": str(config.rho),
            "n": config.n, "amax": config.amax,
            "tupleCount": config.tuple_count,
        },
    )
    return _assemble(
        instances, config.smax, header, workers=config.workers,
        cell_cap=config.table_cell_cap, node_cap=config.enum_node_cap,
        count_t_max=config.count_t_max, rho=config.rho,
        include_timings=config.include_timings,
    )


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def report_csv(report: dict) -> str:
    """Flat projection: one line per (tuple, s, boundId), count checks with
    an empty s column."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([
        "tuple", "s", "boundId", "lo", "hi", "applicable", "asserted",
        "satisfied", "gExact", "checked", "violations",
    ])
    for row in report["rows"]:
        for b in row["bounds"]:
            w.writerow([
                ",".join(map(str, row["tuple"])), row["s"], b["boundId"],
                b.get("lo", ""), b.get("hi", ""), b["applicable"],
                b["asserted"], b["satisfied"], row["gExact"], "", "",
            ])
    for cc in report["countChecks"]:
        for res in cc["results"]:
            w.writerow([
                ",".join(map(str, cc["tuple"])), "", res["boundId"], "", "",
                "Yes", res["asserted"],
                "no" if res["violations"] else "yes", "",
                res["checked"], res["violations"],
            ])
    return buf.getvalue()


def load_suite(path: str) -> list[tuple[int, ...]]:
    """One comma-separated tuple per line; '#' starts a comment."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                out.append(tuple(int(x) for x in line.split(",")))
            except ValueError as exc:
                raise ConfigError(f"bad suite line {line!r}: {exc}") from exc
    if not out:
        raise ConfigError(f"suite file {path} contains no tuples")
    return out
