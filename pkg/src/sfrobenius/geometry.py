"""Simplex geometry for S(t) and kissing-number data.

S(t) is the (N-1)-simplex cut from the hyperplane a.x = t by the
nonnegative orthant. Its volume, surface area and inradius have closed
forms in the instance data:

    Vol     = t^{N-1} ||a|| / ((N-1)! prod a_i)
    Area    = t^{N-2} sum_i ||alpha_i|| a_i / ((N-2)! prod a_i)
    r(t)    = t ||a|| / sum_i ||alpha_i|| a_i

Rational parts stay exact Fractions; only the square roots widen to
intervals. The isoperimetric identity r * Area = (N-1) * Vol holds as
interval containment and is a standing test.

Unit-ball volumes use the closed form kappa_m = pi^{floor(m/2)} times an
exact rational (the half-integer Gamma values expanded symbolically), so
no interval Gamma evaluation is needed.

Kissing numbers enter the theorems only through "s <= tau_{N-1} + 1",
where a proven LOWER bound on tau is the safe direction. The shipped
table is the best root-lattice minimal-vector count (A_m, D_m, E_6/7/8,
plus the Leech count in dimension 24), monotonized over dimension since
tau never decreases under embedding. The asymptotic exponential bounds
carry unquantified o(1) terms and are display-only, never certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import IndexOutOfRange
from .instance import FrobeniusInstance
from .intervals import RealInterval, pi_interval, sqrt_int


def unit_ball_volume(m: int) -> RealInterval:
    """kappa_m, the volume of the m-dimensional unit ball; kappa_0 = 1."""
    if m < 0:
        raise IndexOutOfRange("dimension must be nonnegative")
    k = m // 2
    if m % 2 == 0:
        rat = Fraction(1, math.factorial(k))
    else:
        # Gamma(k + 3/2) = (2k+2)! sqrt(pi) / (4^{k+1} (k+1)!)
        rat = Fraction(4 ** (k + 1) * math.factorial(k + 1), math.factorial(2 * k + 2))
    if k == 0:
        return RealInterval(rat)
    return pi_interval() ** k * rat


@dataclass(frozen=True)
class SimplexData:
    inst: FrobeniusInstance
    t: int
    volume: RealInterval
    surface: RealInterval
    inradius: RealInterval


def simplex_data(inst: FrobeniusInstance, t: int) -> SimplexData:
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        zero = RealInterval(0)
        return SimplexData(inst, 0, zero, zero, zero)
    n = inst.n
    norm = sqrt_int(inst.norm_sq)
    saa = inst.sum_alpha_a
    vol = norm * Fraction(t ** (n - 1), math.factorial(n - 1) * inst.product)
    area = saa * Fraction(t ** (n - 2), math.factorial(n - 2) * inst.product)
    inr = norm * t / saa
    return SimplexData(inst, t, vol, area, inr)


def face_volume_bounds(
    inst: FrobeniusInstance, t: int, m: int
) -> tuple[RealInterval, RealInterval]:
    """Upper bounds (V_m, V'_m) on the largest m-face volume and on the sum
    of all m-face volumes of S(t).

    V_m <= t^m ||a|| / m!, and S(t) has C(N, m+1) faces of dimension m,
    so V'_m <= C(N, m+1) t^m ||a|| / m!. The m = 0 convention is (1, N):
    a point counts 1 and there are N vertices.
    """
    if not 0 <= m <= inst.n - 1:
        raise IndexOutOfRange(f"face dimension {m} outside 0..{inst.n - 1}")
    if m == 0:
        return RealInterval(1), RealInterval(inst.n)
    vm = sqrt_int(inst.norm_sq) * Fraction(t ** m, math.factorial(m))
    return vm, vm * math.comb(inst.n, m + 1)


@dataclass(frozen=True)
class KissingData:
    m: int
    proven_lower: int
    exact: Optional[int]
    asymptotic_lower: RealInterval
    asymptotic_upper: RealInterval


# dimensions where the kissing number is known exactly (and attained by a
# lattice, so it doubles as the proven lower bound)
_EXACT_KISSING = {1: 2, 2: 6, 3: 12, 4: 24, 8: 240, 24: 196560}


def _best_root_lattice_count(m: int) -> int:
    """Minimal-vector count of the densest classical lattice in dimension m:
    max of A_m, D_m (m >= 3), E_6/7/8, Leech at 24."""
    best = m * (m + 1)  # A_m
    if m >= 3:
        best = max(best, 2 * m * (m - 1))  # D_m
    best = max(best, {6: 72, 7: 126, 8: 240, 24: 196560}.get(m, 0))
    return best


def kissing_data(m: int) -> KissingData:
    """Kissing-number data for dimension m.

    proven_lower is monotone in m by construction: a touching
    configuration embeds into any higher dimension.
    """
    if m < 1:
        raise IndexOutOfRange("dimension must be >= 1")
    proven = max(_best_root_lattice_count(k) for k in range(1, m + 1))
    exact = _EXACT_KISSING.get(m)
    if exact is not None:
        proven = exact
    # leading exponentials of the classical asymptotic bounds; o(1) terms
    # are unquantified, so these are non-certified display values
    mi = RealInterval(m)
    return KissingData(
        m=m,
        proven_lower=proven,
        exact=exact,
        asymptotic_lower=mi.exp2_scaled(0.2075),
        asymptotic_upper=mi.exp2_scaled(0.401),
    )
