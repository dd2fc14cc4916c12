"""Rectangular-lattice distance machinery.

The W x H lattice with W ~ n^(1-a), H ~ n^a (a < 1/2 an exact rational)
and its sublattice with i >= 2 n^a.  Counts representations of m as
i^2 + j^2 (circles) and i^2 - j^2 (hyperbolas) over the sublattice,
verifies the exact sum identities between the two, and assembles the
distinct-distance chain with the interval-bucketed second moment.

All lattice bounds are exact integer floors of rational powers: no
floating point enters any counting path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import CapacityError, DomainError

DEFAULT_ENUM_CEILING = 1 << 26  # sublattice / difference-vector points


def iroot(x: int, q: int) -> int:
    """Exact floor of the q-th root of a nonnegative integer."""
    if x < 0 or q < 1:
        raise DomainError(f"iroot({x}, {q}) undefined")
    if x == 0:
        return 0
    if q == 1:
        return x
    if q == 2:
        return isqrt(x)
    r = int(round(x ** (1.0 / q)))
    while r > 0 and r**q > x:
        r -= 1
    while (r + 1) ** q <= x:
        r += 1
    return r


def iroot_ceil(x: int, q: int) -> int:
    """Exact ceiling of the q-th root of a nonnegative integer."""
    r = iroot(x, q)
    return r if r**q == x else r + 1


def pow_floor(n: int, exponent: Fraction) -> int:
    """floor(n^exponent) computed exactly: floor((n^p)^(1/q))."""
    p, q = exponent.numerator, exponent.denominator
    return iroot(n**p, q)


@dataclass(frozen=True)
class RectLatticeSpec:
    """Exact bounds of the lattice R_a(n) and its sublattice R'_a(n)."""

    n: int
    alpha: Fraction
    w: int  # floor(n^(1-a)), max i
    h: int  # floor(n^a), max j
    i_min: int  # ceil(2 n^a), sublattice lower i bound

    @property
    def sublattice_size(self) -> int:
        return (self.w - self.i_min + 1) * (self.h + 1)

    @property
    def interval_scale(self) -> int:
        """T = floor(n^(2a)), the width scale of the buckets I_l."""
        return pow_floor(self.n, 2 * self.alpha)


def build_spec(n: int, alpha: Fraction) -> RectLatticeSpec:
    alpha = Fraction(alpha)
    if not 0 < alpha < Fraction(1, 2):
        raise DomainError(f"alpha must lie in (0, 1/2), got {alpha}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    p, q = alpha.numerator, alpha.denominator
    w = iroot(n ** (q - p), q)
    h = iroot(n**p, q)
    i_min = iroot_ceil(2**q * n**p, q)
    if i_min > w:
        raise DomainError(
            f"sublattice empty for n={n}, alpha={alpha} (i_min={i_min} > W={w}); n below n0(alpha)"
        )
    excess = (w + 1) * (h + 1) - n
    if excess > 0 and excess**q > 3**q * n ** (q - p):
        raise AssertionError(f"lattice size invariant violated: excess {excess}")
    return RectLatticeSpec(n=n, alpha=alpha, w=w, h=h, i_min=i_min)


@dataclass(frozen=True)
class RepCounts:
    """Sparse multiplicity maps over the sublattice.

    r_keys/r_counts: m = i^2 + j^2 with its multiplicity r(m);
    d_keys/d_counts: m = i^2 - j^2 with its multiplicity d(m).
    Keys ascending, counts >= 1.
    """

    spec: RectLatticeSpec
    r_keys: np.ndarray
    r_counts: np.ndarray
    d_keys: np.ndarray
    d_counts: np.ndarray

    def r_map(self) -> dict[int, int]:
        return dict(zip(self.r_keys.tolist(), self.r_counts.tolist()))

    def d_map(self) -> dict[int, int]:
        return dict(zip(self.d_keys.tolist(), self.d_counts.tolist()))


def _sublattice_values(spec: RectLatticeSpec):
    i = np.arange(spec.i_min, spec.w + 1, dtype=np.int64)
    j = np.arange(0, spec.h + 1, dtype=np.int64)
    return (i * i)[:, None], (j * j)[None, :]


def rep_counts(spec: RectLatticeSpec, ceiling: int = DEFAULT_ENUM_CEILING) -> RepCounts:
    if spec.sublattice_size > ceiling:
        raise CapacityError(f"sublattice size {spec.sublattice_size} exceeds ceiling {ceiling}")
    i2, j2 = _sublattice_values(spec)
    sums = (i2 + j2).ravel()
    diffs = (i2 - j2).ravel()
    r_keys, r_counts = np.unique(sums, return_counts=True)
    d_keys, d_counts = np.unique(diffs, return_counts=True)
    rc = RepCounts(
        spec=spec,
        r_keys=r_keys,
        r_counts=r_counts.astype(np.int64),
        d_keys=d_keys,
        d_counts=d_counts.astype(np.int64),
    )
    lo, hi = spec.i_min**2 - spec.h**2, spec.w**2
    if rc.d_keys[0] < lo or rc.d_keys[-1] > hi:
        raise AssertionError("d(m) support outside proven bounds")
    return rc


@dataclass(frozen=True)
class IdentityReport:
    """The six sums whose pairwise equalities are exact identities."""

    sum_r: int
    sum_d: int
    sum_r2: int
    sum_d2: int
    sum_binom_r2: int
    sum_binom_d2: int


def _moment_sums(counts: np.ndarray) -> tuple[int, int, int]:
    # sum c^2 <= (sum c) * max c <= ceiling^2 < 2^63 at the default ceiling
    c = counts.astype(np.int64)
    s1 = int(np.sum(c))
    s2 = int(np.sum(c * c))
    binom = (s2 - s1) // 2
    return s1, s2, binom


def verify_identities(rc: RepCounts) -> IdentityReport:
    """Compute both sides of each identity; inequality is a defect."""
    sum_r, sum_r2, binom_r = _moment_sums(rc.r_counts)
    sum_d, sum_d2, binom_d = _moment_sums(rc.d_counts)
    report = IdentityReport(
        sum_r=sum_r,
        sum_d=sum_d,
        sum_r2=sum_r2,
        sum_d2=sum_d2,
        sum_binom_r2=binom_r,
        sum_binom_d2=binom_d,
    )
    if not (sum_r == sum_d and sum_r2 == sum_d2 and binom_r == binom_d):
        raise AssertionError(f"representation identities violated: {report}")
    return report


@dataclass(frozen=True)
class FourTuple:
    """Witness for the two-factorization decomposition of m1 m2 = m3 m4."""

    s1: int
    s2: int
    s3: int
    s4: int


def four_number_lemma(m1: int, m2: int, m3: int, m4: int) -> FourTuple:
    """Constructive four-number decomposition with s1 = gcd(m1, m3).

    Returns (s1, s2, s3, s4) with m1 = s1 s2, m2 = s3 s4, m3 = s1 s3,
    m4 = s2 s4.  The gcd choice is valid by per-prime valuations.
    """
    if min(m1, m2, m3, m4) < 1:
        raise DomainError("all four integers must be positive")
    if m1 * m2 != m3 * m4:
        raise DomainError(f"{m1}*{m2} != {m3}*{m4}")
    s1 = gcd(m1, m3)
    s2 = m1 // s1
    s3 = m3 // s1
    if m4 % s2 != 0:
        raise AssertionError(f"gcd construction failed for ({m1},{m2},{m3},{m4})")
    s4 = m4 // s2
    t = FourTuple(s1, s2, s3, s4)
    assert t.s1 * t.s2 == m1 and t.s3 * t.s4 == m2 and t.s1 * t.s3 == m3 and t.s2 * t.s4 == m4
    return t


def sum_binom_d2(rc: RepCounts) -> tuple[int, list[tuple[int, int]]]:
    """S = sum over m of C(d(m), 2), bucketed by the intervals I_l.

    Bucket l holds keys m with l^2 T <= m < (l+1)^2 T for T = floor(n^(2a));
    keys below T (ceiling slack in i_min) land in l = 0.
    """
    t_scale = rc.spec.interval_scale
    binom = (rc.d_counts * (rc.d_counts - 1)) // 2
    mask = binom > 0
    keys = rc.d_keys[mask]
    vals = binom[mask]
    total = int(vals.sum()) if vals.size else 0
    buckets: dict[int, int] = {}
    for key, v in zip(keys.tolist(), vals.tolist()):
        l = isqrt(key // t_scale) if key >= 0 else 0
        buckets[l] = buckets.get(l, 0) + int(v)
    per_interval = sorted(buckets.items())
    return total, per_interval


def distinct_distances_rect(spec: RectLatticeSpec, ceiling: int = DEFAULT_ENUM_CEILING) -> int:
    """Exact count of distinct nonzero dx^2 + dy^2, 0 <= dx <= W, 0 <= dy <= H.

    Every such difference vector is realized by some pair of lattice
    points, so this is exactly the distinct-distance count of R_a(n).
    """
    if (spec.w + 1) * (spec.h + 1) > ceiling:
        raise CapacityError(f"difference grid exceeds ceiling {ceiling}")
    dx = np.arange(0, spec.w + 1, dtype=np.int64)
    dy = np.arange(0, spec.h + 1, dtype=np.int64)
    vals = ((dx * dx)[:, None] + (dy * dy)[None, :]).ravel()
    return int(np.unique(vals).size) - 1  # drop the zero vector


@dataclass(frozen=True)
class DalphaReport:
    """Full distinct-distance chain for one (n, alpha)."""

    spec: RectLatticeSpec
    distinct: int
    sublattice_size: int
    mk_histogram: dict[int, int]  # k -> |M_k| = #{m : r(m) = k}
    excess_sum: int  # sum_{k>=2} (k-1) |M_k|
    s_binom: int  # sum_m C(d(m), 2)
    per_interval: list[tuple[int, int]]
    identities: IdentityReport


def dalpha_report(n: int, alpha: Fraction, ceiling: int = DEFAULT_ENUM_CEILING) -> DalphaReport:
    spec = build_spec(n, alpha)
    rc = rep_counts(spec, ceiling)
    identities = verify_identities(rc)
    distinct = distinct_distances_rect(spec, ceiling)
    ks, k_counts = np.unique(rc.r_counts, return_counts=True)
    mk = dict(zip(ks.tolist(), k_counts.tolist()))
    excess = sum((k - 1) * cnt for k, cnt in mk.items() if k >= 2)
    s_binom, per_interval = sum_binom_d2(rc)
    if distinct < spec.sublattice_size - excess:
        raise AssertionError("distinct-distance chain violated: D < |R'| - excess")
    if excess > s_binom:
        raise AssertionError("excess sum exceeds binomial second moment")
    if identities.sum_binom_r2 != s_binom:
        raise AssertionError("bucketed S disagrees with identity sum")
    return DalphaReport(
        spec=spec,
        distinct=distinct,
        sublattice_size=spec.sublattice_size,
        mk_histogram=mk,
        excess_sum=excess,
        s_binom=s_binom,
        per_interval=per_interval,
        identities=identities,
    )


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of the interval-decomposition inequality audit."""

    pairs_checked: int
    skipped_l0: int
    violations: list[tuple]


def interval_witness_check(rc: RepCounts) -> WitnessCheck:
    """Audit every colliding pair a^2-b^2 = c^2-d^2 against the
    floor-exact analogues of the interval inequalities.

    For a pair in bucket l >= 1 (T = floor(n^(2a))):
      (5)  l^2 T <= a^2, c^2 < (l+2)^2 T
      (6)  4 l^2 T <= (s3 s4)^2 < 4 (l+2)^2 T
      (7)  l s2 <= s3 and l s1 <= s4
    Bucket 0 (keys below T, ceiling slack) is skipped and reported.
    """
    spec = rc.spec
    t_scale = spec.interval_scale
    i = np.arange(spec.i_min, spec.w + 1, dtype=np.int64)
    j = np.arange(0, spec.h + 1, dtype=np.int64)
    diffs = ((i * i)[:, None] - (j * j)[None, :]).ravel()
    ii = np.broadcast_to(i[:, None], (i.size, j.size)).ravel()
    jj = np.broadcast_to(j[None, :], (i.size, j.size)).ravel()
    order = np.argsort(diffs, kind="stable")
    diffs, ii, jj = diffs[order], ii[order], jj[order]
    boundaries = np.flatnonzero(np.diff(diffs)) + 1
    starts = np.concatenate(([0], boundaries))
    ends = np.concatenate((boundaries, [diffs.size]))
    checked = 0
    skipped = 0
    violations: list[tuple] = []
    for s, e in zip(starts.tolist(), ends.tolist()):
        if e - s < 2:
            continue
        m = int(diffs[s])
        group = sorted(zip(ii[s:e].tolist(), jj[s:e].tolist()))
        l = isqrt(m // t_scale) if m >= t_scale else 0
        for u in range(len(group)):
            for v in range(u + 1, len(group)):
                (c, d), (a, b) = group[u], group[v]
                checked += 1
                if l == 0:
                    skipped += 1
                    continue
                tup = four_number_lemma(a - c, a + c, b - d, b + d)
                ok = (
                    l * l * t_scale <= a * a < (l + 2) ** 2 * t_scale
                    and l * l * t_scale <= c * c < (l + 2) ** 2 * t_scale
                    and 4 * l * l * t_scale <= (tup.s3 * tup.s4) ** 2 < 4 * (l + 2) ** 2 * t_scale
                    and l * tup.s2 <= tup.s3
                    and l * tup.s1 <= tup.s4
                )
                if not ok:
                    violations.append((m, l, (a, b), (c, d), tup))
    return WitnessCheck(pairs_checked=checked, skipped_l0=skipped, violations=violations)
