"""The kernel lattice {x in Z^N : a.x = 0} and its geometric invariants.

Construction is by unimodular column operations reducing the row a to
(gcd, 0, ..., 0); the remaining columns then generate the full kernel,
and det(B B^T) = ||a||^2 certifies primitivity (an index-k sublattice
would show k^2 * ||a||^2). Basis reduction is textbook LLL with exact
rational Gram-Schmidt; N stays single digits here, so exactness costs
nothing that matters. Successive minima come from Fincke-Pohst sphere
enumeration inside radius max_i ||b_i|| (any basis gives N-1 independent
vectors within that radius, so all minima are captured), followed by a
greedy linear-independence scan in order of increasing norm.

The exact covering radius is computed only for rank 1 (half the
generator). For higher rank only certified bounds are produced:
lam_{N-1}/2 from below, and from above the smaller of (N-1)*lam_{N-1}/2
and half the Gram-Schmidt box diagonal sqrt(sum ||b_i*||^2)/2 (the
nearest-plane argument). Every theorem downstream is monotone in the
covering radius, so one-sided certificates are all that is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EnumerationBudgetExceeded, InternalRankError
from .instance import FrobeniusInstance
from .intervals import RealInterval, sqrt_int

DEFAULT_NODE_CAP = 10 ** 7


@dataclass(frozen=True)
class KernelLattice:
    inst: FrobeniusInstance
    basis: tuple[tuple[int, ...], ...]  # (N-1) rows spanning the kernel
    gram: tuple[tuple[int, ...], ...]
    det_sq: int

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class SuccessiveMinima:
    lambda_sq: tuple[int, ...]               # lambda_m^2, m = 1..N-1
    witnesses: tuple[tuple[int, ...], ...]   # independent vectors attaining them

    @property
    def last(self) -> int:
        return self.lambda_sq[-1]


@dataclass(frozen=True)
class CoveringRadiusBounds:
    lower: RealInterval
    upper: RealInterval
    lower_source: str
    upper_source: str


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def _gram(basis) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_dot(u, v) for v in basis) for u in basis)


def _det_int(m) -> int:
    """Exact determinant of a small integer matrix (fraction-free enough here)."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    assert det.denominator == 1
    return det.numerator


def kernel_basis(inst: FrobeniusInstance) -> KernelLattice:
    """Primitive integer basis of the kernel of the row vector a."""
    a = inst.a
    n = inst.n
    # columns of u form the transform; keep a.u = (g, 0, ..., 0)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    g = a[0]
    for i in range(1, n):
        ai = a[i]
        gg = math.gcd(g, ai)
        # Bezout: p*g + q*ai = gg
        p, q = _bezout(g, ai)
        col0 = [u[r][0] for r in range(n)]
        coli = [u[r][i] for r in range(n)]
        for r in range(n):
            u[r][0] = p * col0[r] + q * coli[r]
            u[r][i] = -(ai // gg) * col0[r] + (g // gg) * coli[r]
        g = gg
    if g != 1:
        raise InternalRankError(f"gcd reduction ended at {g} != 1")
    basis = tuple(tuple(u[r][c] for r in range(n)) for c in range(1, n))
    for row in basis:
        if _dot(row, a) != 0:
            raise InternalRankError(f"basis row {row} not in kernel")
    gram = _gram(basis)
    det_sq = _det_int(gram)
    if det_sq != inst.norm_sq:
        raise InternalRankError(
            f"det^2 = {det_sq} != ||a||^2 = {inst.norm_sq}; kernel not primitive"
        )
    return KernelLattice(inst=inst, basis=basis, gram=gram, det_sq=det_sq)


def _bezout(x: int, y: int) -> tuple[int, int]:
    """p, q with p*x + q*y = gcd(x, y)."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_s, old_t


def _gram_schmidt(basis):
    """Exact GS data: mu[i][j] for j<i and squared norms of the b_i*."""
    r = len(basis)
    bstar = []
    mu = [[Fraction(0)] * r for _ in range(r)]
    norms = []
    for i in range(r):
        vec = [Fraction(x) for x in basis[i]]
        for j in range(i):
            mu[i][j] = sum(Fraction(basis[i][k]) * bstar[j][k] for k in range(len(vec))) / norms[j]
            vec = [x - mu[i][j] * y for x, y in zip(vec, bstar[j])]
        bstar.append(vec)
        norms.append(sum(x * x for x in vec))
    return bstar, mu, norms


def reduce_basis(lat: KernelLattice, delta: Fraction = Fraction(99, 100)) -> KernelLattice:
    """LLL-reduce the basis in place of the same lattice (unimodular)."""
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    b = [list(row) for row in lat.basis]
    r = len(b)
    if r <= 1:
        return lat
    _, mu, norms = _gram_schmidt(b)
    half = Fraction(1, 2)
    k = 1
    while k < r:
        for j in range(k - 1, -1, -1):
            m = mu[k][j]
            if abs(m) > half:
                c = (m + half).__floor__()
                b[k] = [x - c * y for x, y in zip(b[k], b[j])]
                _, mu, norms = _gram_schmidt(b)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            _, mu, norms = _gram_schmidt(b)
            k = max(k - 1, 1)
    basis = tuple(tuple(row) for row in b)
    gram = _gram(basis)
    det_sq = _det_int(gram)
    if det_sq != lat.det_sq:
        raise InternalRankError("LLL changed the lattice determinant")
    return KernelLattice(inst=lat.inst, basis=basis, gram=gram, det_sq=det_sq)


def _enumerate_up_to(basis, radius_sq: Fraction, node_cap: int):
    """All nonzero lattice vectors v with ||v||^2 <= radius_sq, one per +-pair.

    Fincke-Pohst on exact rational Gram-Schmidt data; yields (norm_sq, v)
    with integer norm_sq.
    """
    r = len(basis)
    _, mu, norms = _gram_schmidt(basis)
    found = {}
    nodes = 0
    coeffs = [0] * r

    def rec(i: int, rem: Fraction):
        nonlocal nodes
        if i < 0:
            v = tuple(
                sum(coeffs[j] * basis[j][k] for j in range(r))
                for k in range(len(basis[0]))
            )
            if any(v):
                nsq = sum(x * x for x in v)
                key = v if _sign_canonical(v) else tuple(-x for x in v)
                if key not in found or nsq < found[key]:
                    found[key] = nsq
            return
        if norms[i] == 0:
            raise InternalRankError("degenerate Gram-Schmidt norm")
        center = -sum(mu[j][i] * coeffs[j] for j in range(i + 1, r))
        span_sq = rem / norms[i]
        # integer u with (u - center)^2 <= span_sq
        lo = _ceil_frac(center - _sqrt_upper(span_sq))
        hi = _floor_frac(center + _sqrt_upper(span_sq))
        for u in range(lo, hi + 1):
            d = (u - center) ** 2 * norms[i]
            if d > rem:
                continue
            nodes += 1
            if nodes > node_cap:
                raise EnumerationBudgetExceeded(f"> {node_cap} enumeration nodes")
            coeffs[i] = u
            rec(i - 1, rem - d)
        coeffs[i] = 0

    rec(r - 1, Fraction(radius_sq))
    return sorted((nsq, v) for v, nsq in found.items())


def _sign_canonical(v) -> bool:
    for x in v:
        if x:
            return x > 0
    return True


def _sqrt_upper(f: Fraction) -> Fraction:
    """Rational upper bound on sqrt(f) for f >= 0."""
    if f <= 0:
        return Fraction(0)
    x = Fraction(math.isqrt(_ceil_frac(f)) + 1)  # x >= sqrt(f)
    for _ in range(4):
        x = (x + f / x) / 2  # Newton from above stays above
    assert x * x >= f
    return x


def _ceil_frac(f: Fraction) -> int:
    return -((-f).__floor__())


def _floor_frac(f: Fraction) -> int:
    return f.__floor__()


def successive_minima(
    lat: KernelLattice, node_cap: int = DEFAULT_NODE_CAP
) -> SuccessiveMinima:
    """Exact successive minima with witness vectors.

    Expects a reduced basis (any basis is correct, reduction keeps the
    enumeration radius and node count small).
    """
    basis = lat.basis
    r = len(basis)
    radius_sq = max(sum(x * x for x in row) for row in basis)
    vecs = _enumerate_up_to(basis, Fraction(radius_sq), node_cap)
    lam: list[int] = []
    wit: list[tuple[int, ...]] = []
    for nsq, v in vecs:
        if _rank_of(wit + [v]) > len(wit):
            wit.append(v)
            lam.append(nsq)
            if len(lam) == r:
                break
    if len(lam) != r:
        raise InternalRankError("enumeration failed to reach full rank")
    return SuccessiveMinima(lambda_sq=tuple(lam), witnesses=tuple(wit))


def _rank_of(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def is_well_rounded(sm: SuccessiveMinima) -> bool:
    return len(set(sm.lambda_sq)) == 1


def covering_radius_bounds(
    lat: KernelLattice, sm: SuccessiveMinima
) -> CoveringRadiusBounds:
    """Certified lower/upper bounds on the covering radius.

    Rank 1 is exact (half the generator). Otherwise lower is
    lam_{N-1}/2 and upper the smaller of the (N-1)*lam_{N-1}/2 chain
    endpoint and half the Gram-Schmidt box diagonal.
    """
    r = lat.rank
    lam_last = sqrt_int(sm.last)
    lower = lam_last / 2
    if r == 1:
        return CoveringRadiusBounds(
            lower=lower, upper=lower,
            lower_source="rank-1 exact", upper_source="rank-1 exact",
        )
    cert_chain = lam_last * Fraction(r, 2)
    _, _, gs_norms = _gram_schmidt(lat.basis)
    cert_box = RealInterval(sum(gs_norms, Fraction(0))).sqrt() / 2
    upper = cert_chain.min_with(cert_box)
    source = (
        "(N-1)*lam/2" if cert_chain.hi <= cert_box.hi else "gram-schmidt box"
    )
    return CoveringRadiusBounds(
        lower=lower, upper=upper,
        lower_source="lam_{N-1}/2", upper_source=source,
    )
