"""Outward-rounded real intervals.

Every irrational quantity in this package (Euclidean norms, fractional
powers, pi, the unit-ball volumes kappa_m) is carried as a RealInterval:
a pair lo <= hi of binary floats guaranteed to enclose the exact real
value. Exact data (integers, Fractions) converts to point or one-ulp
intervals; arithmetic is delegated to mpmath's interval context, which
rounds outward. Certified one-sided bounds are then read off the
appropriate endpoint by the caller.

Comparisons are tri-state: True / False when the intervals are disjoint
enough to decide, None when they overlap (the caller maps None to an
"indeterminate" verdict and may retry at higher precision).

Precision is a per-computation argument, not hidden global state: wrap
evaluation in `with working_precision(bits):`. The context manager holds
a lock so worker threads cannot observe each other's precision, which
keeps reports byte-identical regardless of thread count.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Union

import mpmath
from mpmath import iv

DEFAULT_PREC = 120  # bits; retries double this

_prec_lock = threading.RLock()

Exactish = Union[int, Fraction, "RealInterval"]


@contextmanager
def working_precision(bits: int = DEFAULT_PREC) -> Iterator[None]:
    """Run interval arithmetic at a fixed binary precision, serialized."""
    with _prec_lock:
        old = iv.prec
        iv.prec = bits
        try:
            yield
        finally:
            iv.prec = old


def _to_iv(x):
    if isinstance(x, RealInterval):
        return x._iv
    if isinstance(x, int):
        return iv.mpf(x)
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    raise TypeError(f"cannot coerce {type(x).__name__} to RealInterval")


class RealInterval:
    """Immutable enclosure [lo, hi] of a real number."""

    __slots__ = ("_iv",)

    def __init__(self, value: Exactish):
        object.__setattr__(self, "_iv", _to_iv(value))

    def __setattr__(self, *_):
        raise AttributeError("RealInterval is immutable")

    @classmethod
    def _wrap(cls, v) -> "RealInterval":
        out = cls.__new__(cls)
        object.__setattr__(out, "_iv", v)
        return out

    @classmethod
    def from_endpoints(cls, lo, hi) -> "RealInterval":
        return cls._wrap(iv.mpf([lo, hi]))

    @classmethod
    def sqrt_of(cls, n: Exactish) -> "RealInterval":
        return cls._wrap(iv.sqrt(_to_iv(n)))

    # -- endpoints ---------------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        return mpmath.mpf(self._iv._mpi_[0])

    @property
    def hi(self) -> mpmath.mpf:
        return mpmath.mpf(self._iv._mpi_[1])

    def endpoints_str(self, digits: int = 17) -> tuple[str, str]:
        return mpmath.nstr(self.lo, digits), mpmath.nstr(self.hi, digits)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(self._iv + _to_iv(other))

    __radd__ = __add__

    def __sub__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(self._iv - _to_iv(other))

    def __rsub__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(_to_iv(other) - self._iv)

    def __mul__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(self._iv * _to_iv(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(self._iv / _to_iv(other))

    def __rtruediv__(self, other: Exactish) -> "RealInterval":
        return RealInterval._wrap(_to_iv(other) / self._iv)

    def __neg__(self) -> "RealInterval":
        return RealInterval._wrap(-self._iv)

    def __pow__(self, k: int) -> "RealInterval":
        if not isinstance(k, int):
            raise TypeError("use root()/rpow() for non-integer exponents")
        return RealInterval._wrap(self._iv ** k)

    def sqrt(self) -> "RealInterval":
        return RealInterval._wrap(iv.sqrt(self._iv))

    def root(self, k: int) -> "RealInterval":
        """k-th root of a nonnegative interval; exact zero stays zero."""
        if self._iv == iv.mpf(0):
            return RealInterval(0)
        return RealInterval._wrap(self._iv ** (iv.mpf(1) / k))

    def exp2_scaled(self, c: float) -> "RealInterval":
        """2**(c * x), used only for the non-certified kissing asymptotics."""
        return RealInterval._wrap(iv.exp(iv.log(iv.mpf(2)) * iv.mpf(str(c)) * self._iv))

    def max_with(self, other: Exactish) -> "RealInterval":
        a, b = self._iv, _to_iv(other)
        return RealInterval.from_endpoints(
            max(mpmath.mpf(a._mpi_[0]), mpmath.mpf(b._mpi_[0])),
            max(mpmath.mpf(a._mpi_[1]), mpmath.mpf(b._mpi_[1])),
        )

    def min_with(self, other: Exactish) -> "RealInterval":
        a, b = self._iv, _to_iv(other)
        return RealInterval.from_endpoints(
            min(mpmath.mpf(a._mpi_[0]), mpmath.mpf(b._mpi_[0])),
            min(mpmath.mpf(a._mpi_[1]), mpmath.mpf(b._mpi_[1])),
        )

    # -- tri-state comparisons (None = cannot decide) ----------------------

    def le(self, other: Exactish):
        r = self._iv <= _to_iv(other)
        return r if r is None else bool(r)

    def ge(self, other: Exactish):
        r = self._iv >= _to_iv(other)
        return r if r is None else bool(r)

    def lt(self, other: Exactish):
        r = self._iv < _to_iv(other)
        return r if r is None else bool(r)

    def gt(self, other: Exactish):
        r = self._iv > _to_iv(other)
        return r if r is None else bool(r)

    def contains(self, x: Exactish) -> bool:
        other = _to_iv(x)
        return self._iv.a <= other.a and other.b <= self._iv.b

    def is_positive(self):
        return self.gt(0)

    def __repr__(self) -> str:
        lo, hi = self.endpoints_str(12)
        return f"RealInterval[{lo}, {hi}]"


PI = None  # populated lazily per precision; use pi_interval()


def pi_interval() -> RealInterval:
    return RealInterval._wrap(+iv.pi)


def sqrt_int(n: int) -> RealInterval:
    """Enclosure of sqrt(n) for an exact nonnegative integer."""
    if n < 0:
        raise ValueError("sqrt of negative integer")
    return RealInterval.sqrt_of(n)
