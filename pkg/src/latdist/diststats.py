"""Exact distance-class histograms and quadruple (energy) statistics.

All counting is over ordered pairs of distinct points, keyed by exact
squared distance.  The energy of a configuration is the number of
ordered 4-tuples (a, p, b, q) with |ap| = |bq| > 0, which equals the
sum of squared class sizes; a direct 4-tuple enumerator guards the
implementation at small scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, log, sqrt

import numpy as np

from .errors import CapacityError, DomainError, check_uint128

DEFAULT_DENSE_CEILING = 1 << 28  # dense histogram keys
DEFAULT_BRUTE_CEILING = 10_000  # points for all-pairs enumeration
DEFAULT_QUAD_CEILING = 64  # points for 4-tuple enumeration
# per-chunk dense slice for the streaming L-shape histogram (~256 MiB)
LSHAPE_CHUNK_KEYS = 1 << 25


class DistanceHistogram:
    """Map squared distance -> ordered-pair count.

    Backed by a dense int64 array for lattice-sized key ranges or a
    plain dict for small/sparse inputs; both expose the same view.
    """

    def __init__(self, dense: np.ndarray | None = None, sparse: dict[int, int] | None = None):
        if (dense is None) == (sparse is None):
            raise ValueError("exactly one backing store required")
        self._dense = dense
        self._sparse = sparse

    @classmethod
    def from_dict(cls, entries: dict[int, int]) -> "DistanceHistogram":
        return cls(sparse=dict(entries))

    def count(self, key: int) -> int:
        if self._sparse is not None:
            return self._sparse.get(key, 0)
        if 0 <= key < len(self._dense):
            return int(self._dense[key])
        return 0

    def items(self):
        """Nonzero (squared distance, ordered count) pairs, ascending keys."""
        if self._sparse is not None:
            yield from sorted(self._sparse.items())
        else:
            keys = np.nonzero(self._dense)[0]
            for k in keys:
                yield int(k), int(self._dense[k])

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    @property
    def num_classes(self) -> int:
        if self._sparse is not None:
            return len(self._sparse)
        return int(np.count_nonzero(self._dense))

    @property
    def total_ordered_pairs(self) -> int:
        if self._sparse is not None:
            return sum(self._sparse.values())
        return int(self._dense.sum())

    def energy(self) -> int:
        """Sum of squared class sizes, exact."""
        if self._sparse is not None:
            total = sum(c * c for c in self._sparse.values())
        else:
            total = _exact_sum_of_squares(self._dense[self._dense > 0])
        return check_uint128(total, "quadruple energy")


def _exact_sum_of_squares(counts: np.ndarray) -> int:
    """Exact sum of c^2 for int64 counts < 2^31, without int64 overflow.

    Splits c = hi * 2^16 + lo so each partial sum stays within int64,
    then recombines in Python integers.
    """
    if counts.size == 0:
        return 0
    if int(counts.max()) >= 1 << 31:
        return sum(int(c) * int(c) for c in counts.tolist())
    hi = counts >> 16
    lo = counts & 0xFFFF
    s_hh = int(np.sum(hi * hi, dtype=np.int64))
    s_hl = int(np.sum(hi * lo, dtype=np.int64))
    s_ll = int(np.sum(lo * lo, dtype=np.int64))
    return (s_hh << 32) + (s_hl << 17) + s_ll


def _check_points(points) -> list[tuple[int, int]]:
    pts = [(int(x), int(y)) for x, y in points]
    if len(set(pts)) != len(pts):
        raise DomainError("points must be pairwise distinct")
    for x, y in pts:
        if not (-(1 << 31) <= x < 1 << 31 and -(1 << 31) <= y < 1 << 31):
            raise DomainError(f"coordinate ({x},{y}) outside 32-bit range")
    return pts


def histogram_bruteforce(points, ceiling: int = DEFAULT_BRUTE_CEILING) -> DistanceHistogram:
    """All-pairs oracle histogram; quadratic, for small configurations."""
    pts = _check_points(points)
    if len(pts) < 2:
        raise DomainError("need at least 2 points")
    if len(pts) > ceiling:
        raise CapacityError(f"{len(pts)} points exceeds brute-force ceiling {ceiling}")
    entries: dict[int, int] = {}
    for i in range(len(pts)):
        xi, yi = pts[i]
        for j in range(i + 1, len(pts)):
            dx = xi - pts[j][0]
            dy = yi - pts[j][1]
            key = dx * dx + dy * dy
            entries[key] = entries.get(key, 0) + 2
    return DistanceHistogram.from_dict(entries)


def histogram_rect_fast(W: int, H: int, ceiling: int = DEFAULT_DENSE_CEILING) -> DistanceHistogram:
    """Histogram of the full W x H grid via difference-vector counting.

    A nonzero difference (dx, dy), 0 <= dx < W, 0 <= dy < H, is realized
    by (W - dx)(H - dy) positions and contributes with sign multiplicity
    4 when both components are nonzero (the vector and its reflections
    (±dx, ±dy) are distinct) and 2 on the axes.
    """
    if W < 1 or H < 1 or W * H < 2:
        raise DomainError(f"grid {W}x{H} has fewer than 2 points")
    max_key = (W - 1) ** 2 + (H - 1) ** 2
    if max_key + 1 > ceiling:
        raise CapacityError(f"dense histogram needs {max_key + 1} keys, ceiling {ceiling}")
    dx = np.arange(W, dtype=np.int64)
    dy = np.arange(H, dtype=np.int64)
    keys = (dx * dx)[:, None] + (dy * dy)[None, :]
    mult = np.full((W, H), 4.0)
    mult[0, :] = 2.0
    mult[:, 0] = 2.0
    mult[0, 0] = 0.0
    weights = (W - dx)[:, None] * (H - dy)[None, :] * mult
    dense = np.bincount(keys.ravel(), weights=weights.ravel(), minlength=max_key + 1)
    return DistanceHistogram(dense=np.rint(dense).astype(np.int64))


@dataclass(frozen=True)
class QuadrupleStats:
    """Distinct-distance count, energy |Q|, and the Cauchy-Schwarz bound."""

    distinct: int
    total_ordered_pairs: int
    energy: int
    cs_bound: Fraction  # (N^2 - N)^2 / x
    gap_ratio: float  # energy * x / (N^2 - N)^2, >= 1


def quadruple_stats(h: DistanceHistogram) -> QuadrupleStats:
    x = h.num_classes
    total = h.total_ordered_pairs
    if x == 0:
        raise DomainError("empty histogram")
    energy = h.energy()
    cs_bound = Fraction(total * total, x)
    gap = Fraction(energy * x, total * total)
    return QuadrupleStats(
        distinct=x,
        total_ordered_pairs=total,
        energy=energy,
        cs_bound=cs_bound,
        gap_ratio=float(gap),
    )


def quadruple_bruteforce(points, ceiling: int = DEFAULT_QUAD_CEILING) -> int:
    """Count ordered 4-tuples (a, p, b, q) with |ap| = |bq| > 0 directly.

    Enumerates ordered pairs of ordered pairs; shared vertices and
    coincident segments are counted, matching the energy definition.
    """
    pts = _check_points(points)
    if len(pts) > ceiling:
        raise CapacityError(f"{len(pts)} points exceeds 4-tuple ceiling {ceiling}")
    dists = []
    for a in pts:
        for p in pts:
            if a != p:
                dx, dy = a[0] - p[0], a[1] - p[1]
                dists.append(dx * dx + dy * dy)
    count = 0
    for d1 in dists:
        for d2 in dists:
            if d1 == d2:
                count += 1
    return count


@dataclass(frozen=True)
class SquareLatticeReport:
    side: int
    n_points: int
    stats: QuadrupleStats
    energy_over_n3logn: float  # |Q| / (N^3 ln N)
    distinct_norm: float  # x sqrt(ln N) / N
    gap_over_sqrtlog: float  # gap_ratio / sqrt(ln N)


def square_lattice_report(m: int, ceiling: int = DEFAULT_DENSE_CEILING) -> SquareLatticeReport:
    if m < 2:
        raise DomainError(f"side must be >= 2, got {m}")
    h = histogram_rect_fast(m, m, ceiling)
    stats = quadruple_stats(h)
    n_points = m * m
    ln_n = log(n_points)
    return SquareLatticeReport(
        side=m,
        n_points=n_points,
        stats=stats,
        energy_over_n3logn=stats.energy / (n_points**3 * ln_n),
        distinct_norm=stats.distinct * sqrt(ln_n) / n_points,
        gap_over_sqrtlog=stats.gap_ratio / sqrt(ln_n),
    )


def lshape_points(n: int) -> list[tuple[int, int]]:
    """(1,0)..(n,0) on the x-axis plus (0,1)..(0,n) on the y-axis."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return [(i, 0) for i in range(1, n + 1)] + [(0, j) for j in range(1, n + 1)]


@dataclass(frozen=True)
class LShapeReport:
    n: int
    point_count: int
    distinct: int
    trivial_energy: int  # sum of d_i^2 over integer distances i <= n/2
    energy: int
    cs_bound: Fraction
    gap_ratio: float
    axis_pair_total: int  # ordered pairs on a common axis
    cross_pair_total: int  # ordered axis-to-axis pairs
    cross_integer_pairs: int  # cross pairs whose distance is an integer (Pythagorean)


def _lshape_scan(n: int):
    """Stream the L-shape histogram in key ranges.

    Cross pairs contribute key i^2 + j^2 with ordered weight 2 per
    (i, j) in [1, n]^2; intra-axis pairs contribute key d^2 with weight
    4(n - d).  Yields per-chunk exact count arrays plus the counts found
    at perfect-square keys (the integer-distance classes d_i).
    """
    max_key = 2 * n * n
    distinct = 0
    energy = 0
    total = 0
    d_integer: dict[int, int] = {}
    cross_integer = 0
    for lo in range(1, max_key + 1, LSHAPE_CHUNK_KEYS):
        hi = min(lo + LSHAPE_CHUNK_KEYS, max_key + 1)
        chunks = []
        weights = []
        # cross keys, i <= j half with doubled weight
        for i in range(1, isqrt(hi - 1) + 1):
            j_lo = max(i, isqrt(max(lo - i * i - 1, 0)) + 1)
            while j_lo * j_lo + i * i < lo:
                j_lo += 1
            j_hi = min(n, isqrt(hi - 1 - i * i))
            if j_lo > j_hi or i > n:
                continue
            j = np.arange(j_lo, j_hi + 1, dtype=np.int64)
            keys = i * i + j * j
            w = np.full(j.shape, 4.0)
            if j_lo == i:
                w[0] = 2.0
            chunks.append(keys - lo)
            weights.append(w)
        # intra-axis keys at d^2
        d_lo = isqrt(max(lo - 1, 0)) + 1
        while d_lo * d_lo < lo:
            d_lo += 1
        d_hi = min(n - 1, isqrt(hi - 1))
        if d_lo <= d_hi:
            d = np.arange(d_lo, d_hi + 1, dtype=np.int64)
            chunks.append(d * d - lo)
            weights.append(4.0 * (n - d))
        if not chunks:
            continue
        keys = np.concatenate(chunks)
        w = np.concatenate([np.broadcast_to(x, c.shape) for x, c in zip(weights, chunks)])
        dense = np.bincount(keys, weights=w, minlength=hi - lo)
        counts = np.rint(dense).astype(np.int64)
        nz = counts[counts > 0]
        distinct += int(nz.size)
        energy += _exact_sum_of_squares(nz)
        total += int(nz.sum())
        # record integer-distance classes in this range
        for dval in range(isqrt(max(lo - 1, 0)) + 1, isqrt(hi - 1) + 1):
            key = dval * dval
            if not lo <= key < hi:
                continue
            c = int(counts[key - lo])
            if c > 0:
                d_integer[dval] = c
                intra = 4 * (n - dval) if dval <= n - 1 else 0
                cross_integer += c - intra
    return distinct, energy, total, d_integer, cross_integer


def lshape_report(n: int, bitset_ceiling: int = 1 << 34) -> LShapeReport:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if 2 * n * n > bitset_ceiling:
        raise CapacityError(f"key range 2n^2 = {2 * n * n} exceeds ceiling {bitset_ceiling}")
    distinct, energy, total, d_integer, cross_integer = _lshape_scan(n)
    p = 2 * n
    expected_total = p * p - p
    if total != expected_total:
        raise AssertionError(f"ordered-pair total {total} != {expected_total}")
    trivial = sum(d_integer.get(i, 0) ** 2 for i in range(1, n // 2 + 1))
    x = distinct
    cs_bound = Fraction(expected_total * expected_total, x)
    gap = Fraction(energy * x, expected_total * expected_total)
    axis_total = 2 * n * (n - 1)
    return LShapeReport(
        n=n,
        point_count=p,
        distinct=distinct,
        trivial_energy=trivial,
        energy=check_uint128(energy, "L-shape energy"),
        cs_bound=cs_bound,
        gap_ratio=float(gap),
        axis_pair_total=axis_total,
        cross_pair_total=2 * n * n,
        cross_integer_pairs=cross_integer,
    )
