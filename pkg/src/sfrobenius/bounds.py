"""Theorem evaluators: certified intervals for every bound on g_s and G(t).

Each evaluator consumes certified one-sided certificates and picks the
monotone-safe side per formula; this is the central correctness
discipline of the module:

  * covering radius R: upper certificates feed expressions increasing in
    R when an upper result is wanted (g_s upper bounds, the packing
    threshold), lower certificates feed the Widmer forms where R sits in
    a denominator;
  * lambda_{N-1} is known exactly (an integer square root), so its
    enclosure serves as both sides;
  * eligibility thresholds are always evaluated on the side that makes
    the gate conservative (a Yes is only reported when the true theorem
    condition provably holds).

The erratum-affected published forms (original Theorem 2.2 with C_N,
original Lemma 3.1 with V_m, Blichfeldt's upper without the t_*
correction) are available behind `historical_*` evaluators for
comparison reports and are never asserted.

Eligibility comparisons that an interval cannot resolve return
Indeterminate rather than guessing; the harness rebuilds certificates at
doubled precision and retries once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .errors import DimensionTooSmall
from .geometry import kissing_data, unit_ball_volume
from .instance import FrobeniusInstance, sum_alpha_a_interval
from .lattice import (
    CoveringRadiusBounds,
    KernelLattice,
    SuccessiveMinima,
    covering_radius_bounds,
    is_well_rounded,
    kernel_basis,
    reduce_basis,
    successive_minima,
    DEFAULT_NODE_CAP,
)
from .intervals import RealInterval, sqrt_int


class BoundId(str, Enum):
    UPPER_MAIN = "UpperMain"
    UPPER_KISSING = "UpperKissing"
    UPPER_BETA = "UpperBeta"
    LOWER_SIMPLE = "LowerSimple"
    LOWER_RHO = "LowerRho"
    LOWER_WIDMER = "LowerWidmer"
    COUNT_LOWER = "CountLower"
    COUNT_UPPER_CORRECTED = "CountUpperCorrected"
    COUNT_UPPER_LEMMA31 = "CountUpperLemma31"
    COUNT_UPPER_WIDMER = "CountUpperWidmer"
    PACKING_LOWER = "PackingLower"
    RODSETH_REPORTED = "RodsethReported"
    HISTORICAL_LOWER_SIMPLE = "HistoricalLowerSimple"
    HISTORICAL_LOWER_RHO = "HistoricalLowerRho"
    HISTORICAL_COUNT_UPPER_BLICHFELDT = "HistoricalCountUpperBlichfeldt"
    HISTORICAL_COUNT_UPPER_LEMMA31 = "HistoricalCountUpperLemma31"


class Applicability(str, Enum):
    YES = "Yes"
    NO = "No"
    INDETERMINATE = "Indeterminate"


class Direction(str, Enum):
    UPPER_ON_GS = "UpperOnGs"
    LOWER_ON_GS = "LowerOnGs"
    LOWER_ON_COUNT = "LowerOnCount"
    UPPER_ON_COUNT = "UpperOnCount"


@dataclass(frozen=True)
class BoundEvaluation:
    bound_id: BoundId
    direction: Direction
    applicable: Applicability
    value: Optional[RealInterval]
    reason: str = ""


@dataclass(frozen=True)
class DimensionalConstants:
    n: int
    kappa: tuple[RealInterval, ...]  # kappa[m] for m = 0..n
    c_prime_n: Fraction
    _c_n: Optional[RealInterval]
    _a_n: Optional[RealInterval]

    @property
    def c_n(self) -> RealInterval:
        if self._c_n is None:
            raise DimensionTooSmall("C_N requires N >= 3")
        return self._c_n

    @property
    def a_n(self) -> RealInterval:
        if self._a_n is None:
            raise DimensionTooSmall("A_N requires N >= 3")
        return self._a_n


def _pow2_half(e2: int) -> RealInterval:
    """2 ** (e2/2) with e2 an integer (possibly odd)."""
    if e2 >= 0:
        return sqrt_int(2 ** e2)
    return 1 / sqrt_int(2 ** (-e2))


def _pi_half_power(e: int) -> RealInterval:
    """pi ** (e/2) for integer e >= 0."""
    from .intervals import pi_interval

    if e % 2 == 0:
        return pi_interval() ** (e // 2)
    return (pi_interval() ** e).sqrt()


def constants(n: int) -> DimensionalConstants:
    """kappa_m for m <= N plus the dimensional constants C_N, C'_N, A_N.

    C_N and A_N are defined for N >= 3 only (their derivation uses the
    exponent 1/(N-2)); accessing them for N = 2 raises DimensionTooSmall.
    """
    if n < 2:
        raise DimensionTooSmall("need N >= 2")
    kappa = tuple(unit_ball_volume(m) for m in range(n + 1))
    c_prime = Fraction((n - 1) * math.factorial(n - 1), 2 ** (n - 1))
    c_n = a_n = None
    if n >= 3:
        num = (
            _pow2_half(2 * n * n - 7 * n + 4)
            * sqrt_int((n - 1) ** n)
            * (math.factorial(n - 1) ** (n - 1))
        )
        den = _pi_half_power(n - 2) * kappa[n - 1] ** (n - 2)
        c_n = num / den
        a_n = c_n * Fraction(n ** n, math.factorial(n))
    return DimensionalConstants(
        n=n, kappa=kappa, c_prime_n=c_prime, _c_n=c_n, _a_n=a_n
    )


@dataclass(frozen=True)
class InstanceCertificates:
    """Per-instance geometric pipeline output feeding the evaluators."""

    inst: FrobeniusInstance
    lattice: KernelLattice
    minima: SuccessiveMinima
    covering: CoveringRadiusBounds
    well_rounded: bool

    @property
    def lambda_top(self) -> RealInterval:
        # exact sqrt enclosure; valid as upper and lower certificate
        return sqrt_int(self.minima.last)

    @property
    def r_lower(self) -> RealInterval:
        return self.covering.lower

    @property
    def r_upper(self) -> RealInterval:
        return self.covering.upper


def build_certificates(
    inst: FrobeniusInstance, node_cap: int = DEFAULT_NODE_CAP
) -> InstanceCertificates:
    lat = reduce_basis(kernel_basis(inst))
    sm = successive_minima(lat, node_cap=node_cap)
    cov = covering_radius_bounds(lat, sm)
    return InstanceCertificates(
        inst=inst, lattice=lat, minima=sm, covering=cov,
        well_rounded=is_well_rounded(sm),
    )


def _gate(s: int, threshold: RealInterval) -> Applicability:
    """Is s >= threshold, decided conservatively?"""
    r = threshold.le(s)
    if r is True:
        return Applicability.YES
    if r is False:
        return Applicability.NO
    return Applicability.INDETERMINATE


# ---------------------------------------------------------------------------
# upper bounds on g_s
# ---------------------------------------------------------------------------

def upper_main(
    inst: FrobeniusInstance, s: int, r_upper: RealInterval
) -> BoundEvaluation:
    """max{ R(N-1) sum||alpha_i||a_i / ||a|| + 1, (s (N-1)! prod a)^{1/(N-2)} }."""
    n = inst.n
    if n < 3:
        raise DimensionTooSmall("exponent 1/(N-2) undefined at N = 2")
    saa = sum_alpha_a_interval(inst.a)
    term1 = r_upper * (n - 1) * saa / sqrt_int(inst.norm_sq) + 1
    if s == 0:
        value = term1
    else:
        term2 = RealInterval(s * math.factorial(n - 1) * inst.product).root(n - 2)
        value = term1.max_with(term2)
    return BoundEvaluation(
        BoundId.UPPER_MAIN, Direction.UPPER_ON_GS, Applicability.YES, value
    )


def upper_kissing(
    inst: FrobeniusInstance, s: int, r_upper: RealInterval, tau_lower: int
) -> BoundEvaluation:
    """3 R sum||alpha_i||a_i / ||a||, applicable while s <= tau_{N-1} + 1."""
    if s > tau_lower + 1:
        return BoundEvaluation(
            BoundId.UPPER_KISSING, Direction.UPPER_ON_GS, Applicability.NO,
            None, reason=f"s = {s} > tau+1 = {tau_lower + 1}",
        )
    value = 3 * r_upper * sum_alpha_a_interval(inst.a) / sqrt_int(inst.norm_sq)
    return BoundEvaluation(
        BoundId.UPPER_KISSING, Direction.UPPER_ON_GS, Applicability.YES, value
    )


def upper_beta(
    inst: FrobeniusInstance, s: int, r_upper: RealInterval
) -> BoundEvaluation:
    """max{ beta, (beta s (N-1)! prod a)^{1/(N-1)} } with
    beta = (N-1) R / r(1) + 1; well-defined for every N >= 2."""
    n = inst.n
    beta = r_upper * (n - 1) * sum_alpha_a_interval(inst.a) / sqrt_int(inst.norm_sq) + 1
    if s == 0:
        value = beta
    else:
        value = beta.max_with((beta * (s * math.factorial(n - 1) * inst.product)).root(n - 1))
    return BoundEvaluation(
        BoundId.UPPER_BETA, Direction.UPPER_ON_GS, Applicability.YES, value
    )


# ---------------------------------------------------------------------------
# lower bounds on g_s (corrected appendix forms)
# ---------------------------------------------------------------------------

def lower_simple(
    inst: FrobeniusInstance, s: int, lambda_top: RealInterval
) -> BoundEvaluation:
    """((s+1-N) prod a)^{1/(N-1)} under the erratum eligibility condition
    s >= (lam_{N-1} sum||alpha_i||a_i)^{N-1} / (||a||^{N-1} prod a) + (N-1)."""
    n = inst.n
    if s + 1 - n <= 0:
        return BoundEvaluation(
            BoundId.LOWER_SIMPLE, Direction.LOWER_ON_GS, Applicability.NO,
            None, reason="vacuous: s + 1 - N <= 0",
        )
    saa = sum_alpha_a_interval(inst.a)
    threshold = ((lambda_top * saa) ** (n - 1)
                 / (sqrt_int(inst.norm_sq) ** (n - 1) * inst.product)) + (n - 1)
    gate = _gate(s, threshold)
    if gate is not Applicability.YES:
        return BoundEvaluation(
            BoundId.LOWER_SIMPLE, Direction.LOWER_ON_GS, gate, None,
            reason=f"eligibility s >= {threshold.endpoints_str(6)} not established",
        )
    value = RealInterval((s + 1 - n) * inst.product).root(n - 1)
    return BoundEvaluation(
        BoundId.LOWER_SIMPLE, Direction.LOWER_ON_GS, Applicability.YES, value
    )


def lower_rho(
    inst: FrobeniusInstance,
    s: int,
    rho: Union[int, Fraction, RealInterval],
    lambda_top: RealInterval,
    consts: Optional[DimensionalConstants] = None,
) -> BoundEvaluation:
    """(s (N-1)! prod a / rho)^{1/(N-1)} when
    s >= prod(a)^{N-2}/(N-1)! * (A_N lam^{N-1}/(rho-1))^{N-1} (corrected A_N)."""
    n = inst.n
    if n < 3:
        raise DimensionTooSmall("corrected Theorem 2.2 rho-form needs N >= 3")
    rho = rho if isinstance(rho, RealInterval) else RealInterval(rho)
    if rho.gt(1) is not True:
        raise ValueError("rho must be certainly > 1")
    if consts is None:
        consts = constants(n)
    base = consts.a_n * lambda_top ** (n - 1) / (rho - 1)
    threshold = base ** (n - 1) * Fraction(
        inst.product ** (n - 2), math.factorial(n - 1)
    )
    gate = _gate(s, threshold)
    if gate is not Applicability.YES:
        return BoundEvaluation(
            BoundId.LOWER_RHO, Direction.LOWER_ON_GS, gate, None,
            reason=f"eligibility s >= {threshold.endpoints_str(6)} not established",
        )
    value = (RealInterval(s * math.factorial(n - 1) * inst.product) / rho).root(n - 1)
    return BoundEvaluation(
        BoundId.LOWER_RHO, Direction.LOWER_ON_GS, Applicability.YES, value
    )


def lower_widmer(
    inst: FrobeniusInstance,
    s: int,
    r_lower: RealInterval,
    r_upper: RealInterval,
    lambda_top: RealInterval,
) -> BoundEvaluation:
    """Widmer-based lower bound; the covering radius enters favorably, so
    both the gate and the value use the lower certificate (r_upper is
    accepted for signature symmetry with the other evaluators)."""
    n = inst.n
    if n < 3:
        raise DimensionTooSmall("Widmer-based bound evaluated for N >= 3 only")
    saa = sum_alpha_a_interval(inst.a)
    norm = sqrt_int(inst.norm_sq)
    threshold = (
        (4 * lambda_top * saa) ** (n - 1)
        * sqrt_int((n - 1) ** (3 * n * n - 1))
        / (math.factorial(n - 1) * norm ** (n - 2) * r_lower * inst.product)
    )
    gate = _gate(s, threshold)
    if gate is not Applicability.YES:
        return BoundEvaluation(
            BoundId.LOWER_WIDMER, Direction.LOWER_ON_GS, gate, None,
            reason=f"eligibility s >= {threshold.endpoints_str(6)} not established",
        )
    value = (
        RealInterval(math.factorial(n - 2)).root(n - 1)
        / (4 * sqrt_int((n - 1) ** (3 * (n + 1))))
        * (RealInterval(s * inst.product) * r_lower / norm).root(n - 1)
    )
    return BoundEvaluation(
        BoundId.LOWER_WIDMER, Direction.LOWER_ON_GS, Applicability.YES, value
    )


def rodseth_report(inst: FrobeniusInstance) -> BoundEvaluation:
    """((N-1)! prod a)^{1/(N-1)}: the classical g_0 lower bound as printed.

    Report-only: the printed form fails literally on small instances
    (e.g. (3,4,5): g_0 = 2 < (2*60)^{1/2}); never asserted."""
    value = RealInterval(math.factorial(inst.n - 1) * inst.product).root(inst.n - 1)
    return BoundEvaluation(
        BoundId.RODSETH_REPORTED, Direction.LOWER_ON_GS, Applicability.YES,
        value, reason="report-only comparison",
    )


# ---------------------------------------------------------------------------
# bounds on the counting function G(t)
# ---------------------------------------------------------------------------

def t_star(inst: FrobeniusInstance, lambda_top: RealInterval) -> RealInterval:
    """Threshold t_* = lam_{N-1} sum||alpha_i||a_i / ||a|| above which S(t)
    certainly contains N-1 independent lattice points."""
    return lambda_top * sum_alpha_a_interval(inst.a) / sqrt_int(inst.norm_sq)


def count_bounds(
    inst: FrobeniusInstance,
    t: int,
    r_lower: RealInterval,
    r_upper: RealInterval,
    lambda_top: RealInterval,
    sm: SuccessiveMinima,
    consts: Optional[DimensionalConstants] = None,
) -> list[BoundEvaluation]:
    """All count-function bounds at a positive integer t.

    The N >= 3 only entries (corrected Lemma 3.1, Widmer) are returned
    with applicable=No at N = 2.
    """
    if t < 1:
        raise ValueError("count bounds are stated for positive t")
    n = inst.n
    if consts is None:
        consts = constants(n)
    saa = sum_alpha_a_interval(inst.a)
    norm = sqrt_int(inst.norm_sq)
    out = []

    # Blichfeldt-side lower bound, decreasing in R: use the upper certificate
    lower_val = (RealInterval(Fraction(t, n - 1)) - r_upper * saa / norm) * Fraction(
        t ** (n - 2), math.factorial(n - 2) * inst.product
    )
    out.append(BoundEvaluation(
        BoundId.COUNT_LOWER, Direction.LOWER_ON_COUNT, Applicability.YES, lower_val
    ))

    ts = lambda_top * saa / norm
    mx = ts.max_with(t)
    corrected = mx ** (n - 1) / inst.product + (n - 1)
    out.append(BoundEvaluation(
        BoundId.COUNT_UPPER_CORRECTED, Direction.UPPER_ON_COUNT,
        Applicability.YES, corrected,
    ))

    if n >= 3:
        lemma31 = (
            RealInterval(Fraction(t ** (n - 1), math.factorial(n - 1) * inst.product))
            + consts.a_n * lambda_top ** (n - 1) * t ** (n - 2)
        )
        out.append(BoundEvaluation(
            BoundId.COUNT_UPPER_LEMMA31, Direction.UPPER_ON_COUNT,
            Applicability.YES, lemma31,
        ))
        widmer = (
            Fraction(4 ** (n - 1), math.factorial(n - 1))
            * sqrt_int((n - 1) ** (3 * n * n - 1))
            * mx ** (n - 1) * norm / (r_lower * inst.product)
        )
        out.append(BoundEvaluation(
            BoundId.COUNT_UPPER_WIDMER, Direction.UPPER_ON_COUNT,
            Applicability.YES, widmer,
        ))
    else:
        for bid in (BoundId.COUNT_UPPER_LEMMA31, BoundId.COUNT_UPPER_WIDMER):
            out.append(BoundEvaluation(
                bid, Direction.UPPER_ON_COUNT, Applicability.NO, None,
                reason="requires N >= 3",
            ))

    tau = kissing_data(n - 1).proven_lower
    packing_threshold = 3 * r_upper * saa / norm
    gate = _gate(t, packing_threshold)
    out.append(BoundEvaluation(
        BoundId.PACKING_LOWER, Direction.LOWER_ON_COUNT, gate,
        RealInterval(tau + 1) if gate is Applicability.YES else None,
        reason="" if gate is Applicability.YES else
        f"t below packing threshold {packing_threshold.endpoints_str(6)}",
    ))
    return out


# ---------------------------------------------------------------------------
# certified scan ceiling
# ---------------------------------------------------------------------------

def certified_ceiling(
    inst: FrobeniusInstance,
    s: int,
    certs: Optional[InstanceCertificates] = None,
) -> int:
    """An integer C such that every t > C has G(t) > s.

    Evaluates the main upper bound (the beta form at N = 2) at level
    s + 1 and adds one: robust to the >= / > looseness at the level
    boundary, at the price of a slightly longer scan.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if certs is None:
        certs = build_certificates(inst)
    if inst.n >= 3:
        ev = upper_main(inst, s + 1, certs.r_upper)
    else:
        ev = upper_beta(inst, s + 1, certs.r_upper)
    return int(mpmath.ceil(ev.value.hi)) + 1


# ---------------------------------------------------------------------------
# historical (erratum-affected) forms, comparison reports only
# ---------------------------------------------------------------------------

def historical_lower_simple(inst: FrobeniusInstance, s: int) -> BoundEvaluation:
    """Original Theorem 2.2 first part: no eligibility condition."""
    n = inst.n
    if s + 1 - n <= 0:
        return BoundEvaluation(
            BoundId.HISTORICAL_LOWER_SIMPLE, Direction.LOWER_ON_GS,
            Applicability.NO, None, reason="vacuous: s + 1 - N <= 0",
        )
    value = RealInterval((s + 1 - n) * inst.product).root(n - 1)
    return BoundEvaluation(
        BoundId.HISTORICAL_LOWER_SIMPLE, Direction.LOWER_ON_GS,
        Applicability.YES, value, reason="erratum-affected published form",
    )


def historical_lower_rho(
    inst: FrobeniusInstance,
    s: int,
    rho: Union[int, Fraction, RealInterval],
    lambda_top: RealInterval,
    consts: Optional[DimensionalConstants] = None,
) -> BoundEvaluation:
    """Original Theorem 2.2 second part: C_N in place of A_N."""
    n = inst.n
    if n < 3:
        raise DimensionTooSmall("needs N >= 3")
    rho = rho if isinstance(rho, RealInterval) else RealInterval(rho)
    if consts is None:
        consts = constants(n)
    base = consts.c_n * lambda_top ** (n - 1) / (rho - 1)
    threshold = base ** (n - 1) * Fraction(
        inst.product ** (n - 2), math.factorial(n - 1)
    )
    gate = _gate(s, threshold)
    value = None
    if gate is Applicability.YES:
        value = (RealInterval(s * math.factorial(n - 1) * inst.product) / rho).root(n - 1)
    return BoundEvaluation(
        BoundId.HISTORICAL_LOWER_RHO, Direction.LOWER_ON_GS, gate, value,
        reason="erratum-affected published form",
    )


def historical_count_upper_blichfeldt(inst: FrobeniusInstance, t: int) -> BoundEvaluation:
    """Published Blichfeldt combination without the max{t, t_*} correction."""
    n = inst.n
    value = RealInterval(Fraction(t ** (n - 1), inst.product) + (n - 1))
    return BoundEvaluation(
        BoundId.HISTORICAL_COUNT_UPPER_BLICHFELDT, Direction.UPPER_ON_COUNT,
        Applicability.YES, value, reason="erratum-affected published form",
    )


def historical_count_upper_lemma31(
    inst: FrobeniusInstance,
    t: int,
    lambda_top: RealInterval,
    consts: Optional[DimensionalConstants] = None,
) -> BoundEvaluation:
    """Published Lemma 3.1 combination (max-face V_m, constant C_N)."""
    n = inst.n
    if n < 3:
        raise DimensionTooSmall("needs N >= 3")
    if consts is None:
        consts = constants(n)
    value = (
        RealInterval(Fraction(t ** (n - 1), math.factorial(n - 1) * inst.product))
        + consts.c_n * lambda_top ** (n - 1) * t ** (n - 2)
    )
    return BoundEvaluation(
        BoundId.HISTORICAL_COUNT_UPPER_LEMMA31, Direction.UPPER_ON_COUNT,
        Applicability.YES, value, reason="erratum-affected published form",
    )
