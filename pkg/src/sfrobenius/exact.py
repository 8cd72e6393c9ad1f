"""Exact denumerants G(t) and s-Frobenius numbers by scan under a ceiling.

G(t) counts nonnegative integer solutions of a.x = t. The table is the
standard coin fold: incorporating coin a turns each residue class mod a
into a running sum, so the numpy path does per-class cumulative sums in
int64 whenever an a-priori bound proves no overflow; otherwise a pure
Python big-integer fold runs. Counts for a prefix of the coin list never
exceed counts for the full list, so bounding the final row bounds every
intermediate.

g_s is recovered as the largest t <= ceiling with G(t) = s. The ceiling
must come from a certificate guaranteeing G(t) > s beyond it (see
bounds.certified_ceiling); with that, the scan is exact, and absence of
any such t below the ceiling proves the value s is skipped entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import CeilingTooLarge, UncertifiedCeiling
from .instance import FrobeniusInstance

DEFAULT_CELL_CAP = 10 ** 8
_INT64_SAFE = 2 ** 62


def count_nonneg_solutions(coins: Sequence[int], t: int) -> int:
    """Nested bounded enumeration over all coins but the last, divisibility
    check for the last. Independent of the DP table; test oracle grade."""
    coins = list(coins)
    if t < 0:
        return 0
    last = coins[-1]

    def rec(i: int, rem: int) -> int:
        if i == len(coins) - 1:
            return 1 if rem % last == 0 else 0
        total = 0
        step = coins[i]
        for x in range(rem // step + 1):
            total += rec(i + 1, rem - x * step)
        return total

    if len(coins) == 1:
        return 1 if t % last == 0 else 0
    return rec(0, t)


@dataclass(frozen=True)
class DenumerantTable:
    inst: FrobeniusInstance
    ceiling: int
    counts: Sequence[int]  # counts[t] exact for 0 <= t <= ceiling

    def count(self, t: int) -> int:
        return int(self.counts[t])


def _max_count_bound(a: tuple[int, ...], T: int) -> int:
    # choosing x_2..x_N freely determines x_1, so the solution count is at
    # most prod_{i>=2} (T//a_i + 1)
    bound = 1
    for ai in a[1:]:
        bound *= T // ai + 1
    return bound


def _fold_numpy(a: tuple[int, ...], T: int) -> np.ndarray:
    c = np.zeros(T + 1, dtype=np.int64)
    c[0] = 1
    for coin in a:
        for r in range(min(coin, T + 1)):
            np.cumsum(c[r::coin], out=c[r::coin])
    return c

def _fold_bigint(a: tuple[int, ...], T: int) -> list[int]:
    c = [0] * (T + 1)
    c[0] = 1
    for coin in a:
        for t in range(coin, T + 1):
            c[t] += c[t - coin]
    return c


def denumerant_table(
    inst: FrobeniusInstance, T: int, cell_cap: int = DEFAULT_CELL_CAP
) -> DenumerantTable:
    """Exact G(t) for all t in 0..T. O(N*T) time, O(T) memory."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    if T + 1 > cell_cap:
        raise CeilingTooLarge(f"table of {T + 1} cells exceeds cap {cell_cap}")
    if _max_count_bound(inst.a, T) < _INT64_SAFE:
        counts: Sequence[int] = _fold_numpy(inst.a, T)
    else:
        counts = _fold_bigint(inst.a, T)
    return DenumerantTable(inst=inst, ceiling=T, counts=counts)


def brute_force_count(inst: FrobeniusInstance, t: int) -> int:
    """Independent oracle for counts[t]; used only in tests."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return count_nonneg_solutions(inst.a, t)


def s_frobenius_exact(
    inst: FrobeniusInstance,
    s: int,
    ceiling: int,
    table: Optional[DenumerantTable] = None,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> Optional[int]:
    """Largest positive t <= ceiling with exactly s representations.

    Returns None when no t <= ceiling attains exactly s (the value s is
    then skipped by this tuple, a legitimate outcome). The caller is
    responsible for certifying the ceiling at level s+1.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if ceiling <= 0:
        raise UncertifiedCeiling(f"ceiling {ceiling} is not a certificate")
    if table is None or table.ceiling < ceiling:
        table = denumerant_table(inst, ceiling, cell_cap=cell_cap)
    counts = table.counts
    if isinstance(counts, np.ndarray):
        hits = np.nonzero(counts[1 : ceiling + 1] == s)[0]
        return int(hits[-1]) + 1 if hits.size else None
    for t in range(ceiling, 0, -1):
        if counts[t] == s:
            return t
    return None
