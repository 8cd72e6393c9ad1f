"""Validated input tuples a = (a_1, ..., a_N) and their precomputed data.

An instance is a strictly increasing coprime tuple of integers > 1,
together with the exact integer quantities every formula downstream
needs: prod(a), ||a||^2, and the deleted-tuple norms ||alpha_i||^2 where
alpha_i drops the i-th entry. The one irrational quantity that shows up
everywhere, sum_i ||alpha_i|| * a_i, is precomputed as an enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateReduction, NotCoprime, TooSmall
from .intervals import DEFAULT_PREC, RealInterval, sqrt_int, working_precision


@dataclass(frozen=True)
class FrobeniusInstance:
    a: tuple[int, ...]
    n: int
    product: int
    norm_sq: int
    deleted_norm_sq: tuple[int, ...]
    sum_alpha_a: RealInterval = field(compare=False, repr=False)

    @property
    def norm(self) -> RealInterval:
        return sqrt_int(self.norm_sq)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + ")"


def sum_alpha_a_interval(a: tuple[int, ...]) -> RealInterval:
    """Enclosure of sum_i ||alpha_i|| * a_i from the exact squared norms."""
    norm_sq = sum(x * x for x in a)
    total = RealInterval(0)
    for ai in a:
        total = total + sqrt_int(norm_sq - ai * ai) * ai
    return total


def validate_tuple(raw: list[int] | tuple[int, ...]) -> FrobeniusInstance:
    """Normalize (sort, dedupe) and validate a tuple.

    Raises TooSmall for entries <= 1 or fewer than two distinct entries,
    NotCoprime for gcd > 1.
    """
    a = tuple(sorted(set(int(x) for x in raw)))
    if len(a) < 2:
        raise TooSmall(f"need at least 2 distinct entries, got {list(raw)}")
    if a[0] <= 1:
        raise TooSmall(f"entries must exceed 1, got {a[0]}")
    if math.gcd(*a) != 1:
        raise NotCoprime(f"gcd({','.join(map(str, a))}) = {math.gcd(*a)}")
    norm_sq = sum(x * x for x in a)
    with working_precision(DEFAULT_PREC):
        saa = sum_alpha_a_interval(a)
    return FrobeniusInstance(
        a=a,
        n=len(a),
        product=math.prod(a),
        norm_sq=norm_sq,
        deleted_norm_sq=tuple(norm_sq - x * x for x in a),
        sum_alpha_a=saa,
    )


def reduce_tuple(inst: FrobeniusInstance) -> FrobeniusInstance:
    """Drop every entry representable by the remaining ones.

    Removing a representable a_i leaves g_s unchanged, so bounds stated
    for irredundant tuples may be applied to the reduction. The largest
    redundant entry is removed first and the scan repeats to a fixed
    point. The representability test is the exact denumerant, no
    approximation.
    """
    from .exact import count_nonneg_solutions  # late import: exact uses our types

    coins = list(inst.a)
    changed = True
    while changed:
        changed = False
        for i in range(len(coins) - 1, -1, -1):
            rest = coins[:i] + coins[i + 1:]
            if len(rest) >= 1 and count_nonneg_solutions(rest, coins[i]) > 0:
                coins.pop(i)
                changed = True
                break
    if len(coins) < 2:
        raise DegenerateReduction(
            f"reduction of {inst.a} left {coins}; impossible for coprime input with a_1 > 1"
        )
    if tuple(coins) == inst.a:
        return inst
    return validate_tuple(coins)
