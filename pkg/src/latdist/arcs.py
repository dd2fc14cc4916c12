"""Lattice points on circles and maximal counts inside short arcs.

For x^2 + y^2 = N, finds the largest number of lattice points contained
in any closed arc of length N^beta (beta < 1/2 a rational).  Window
membership is float-based with an inclusive epsilon; near-boundary
decisions are re-verified with an exact integer chord comparison so the
reported maxima can only over-count, never under-count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import atan2, isqrt, log, exp, pi, sin, nextafter

import numpy as np

from .errors import DomainError

REL_EPS = 1e-12  # inclusive slack on angular comparisons
BOUNDARY_BAND = 1e-9  # relative band triggering the exact chord re-check


@dataclass(frozen=True)
class CirclePoints:
    n: int
    points: list[tuple[int, int]]  # all sign combinations, sorted by angle in [0, 2pi)

    @property
    def angles(self) -> list[float]:
        return [_angle(a, b) for a, b in self.points]


def _angle(a: int, b: int) -> float:
    t = atan2(b, a)
    return t if t >= 0.0 else t + 2.0 * pi


def circle_points(n: int) -> CirclePoints:
    """All integer points on x^2 + y^2 = n, sorted by angle."""
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    pts: set[tuple[int, int]] = set()
    for a in range(isqrt(n) + 1):
        rem = n - a * a
        b = isqrt(rem)
        if b * b == rem:
            pts.update({(a, b), (-a, b), (a, -b), (-a, -b), (b, a), (-b, a), (b, -a), (-b, -a)})
    ordered = sorted(pts, key=lambda p: _angle(*p))
    return CirclePoints(n=n, points=ordered)


def angular_width(n: int, beta: Fraction) -> float:
    """Window width N^beta / sqrt(N) for an arc of length N^beta."""
    return exp((float(beta) - 0.5) * log(n))


def _chord_bound_sq(n: int, theta: float) -> float:
    """Upper-rounded squared chord subtending angle theta on radius sqrt(N)."""
    if theta >= pi:
        return float(4 * n)
    c2 = 4.0 * n * sin(theta / 2.0) ** 2
    return nextafter(c2 * (1.0 + 4.0 * REL_EPS), float("inf"))


def _in_window(diff: float, theta: float, p: tuple[int, int], q: tuple[int, int], n: int) -> bool:
    """Is angular gap `diff` (in [0, 2pi)) within the closed window theta?

    Boundary cases fall back to the exact integer chord test, resolved
    inclusively.
    """
    slack = REL_EPS * max(theta, 1.0)
    if diff <= theta - BOUNDARY_BAND * max(theta, 1.0):
        return True
    if diff > theta + BOUNDARY_BAND * max(theta, 1.0):
        return False
    if theta < pi:
        dx, dy = p[0] - q[0], p[1] - q[1]
        return dx * dx + dy * dy <= _chord_bound_sq(n, theta)
    return diff <= theta + slack


@dataclass(frozen=True)
class ArcScanResult:
    n: int
    beta: Fraction
    arc_length: float
    angular_width: float
    num_points: int
    max_count: int
    witness_start_angle: float
    axis_count: int  # points with |b| < N^beta, the axis-window variant
    running_max: int = 0


def _sweep(points: list[tuple[int, int]], angles: list[float], theta: float, n: int) -> tuple[int, float]:
    """Two-pointer max count over closed angular windows of width theta."""
    k = len(points)
    if k == 0:
        return 0, 0.0
    if theta >= 2.0 * pi:
        return k, angles[0]
    best, best_start = 1, angles[0]
    j = 0
    for i in range(k):
        if j < i:
            j = i
        while j + 1 < i + k:
            nxt = j + 1
            diff = angles[nxt % k] - angles[i] + (2.0 * pi if nxt >= k else 0.0)
            if _in_window(diff, theta, points[nxt % k], points[i], n):
                j = nxt
            else:
                break
        if j - i + 1 > best:
            best, best_start = j - i + 1, angles[i]
    return best, best_start


def brute_arc_count(points: list[tuple[int, int]], angles: list[float], theta: float, n: int) -> int:
    """O(k^2) oracle: max points whose angular gap from some start point is <= theta."""
    k = len(points)
    if k == 0:
        return 0
    if theta >= 2.0 * pi:
        return k
    best = 1
    for i in range(k):
        cnt = 0
        for j in range(k):
            diff = angles[j] - angles[i]
            if diff < 0.0:
                diff += 2.0 * pi
            if _in_window(diff, theta, points[j], points[i], n):
                cnt += 1
        best = max(best, cnt)
    return best


def _axis_count(points: list[tuple[int, int]], n: int, beta: Fraction) -> int:
    cutoff = exp(float(beta) * log(n))
    return sum(1 for _, b in points if abs(b) < cutoff)


def max_arc_count(n: int, beta: Fraction, cp: CirclePoints | None = None) -> ArcScanResult:
    beta = Fraction(beta)
    if not 0 < beta < Fraction(1, 2):
        raise DomainError(f"beta must lie in (0, 1/2), got {beta}")
    if cp is None:
        cp = circle_points(n)
    theta = angular_width(n, beta)
    count, start = _sweep(cp.points, cp.angles, theta, n)
    return ArcScanResult(
        n=n,
        beta=beta,
        arc_length=exp(float(beta) * log(n)),
        angular_width=theta,
        num_points=len(cp.points),
        max_count=count,
        witness_start_angle=start,
        axis_count=_axis_count(cp.points, n, beta),
    )


def _all_circle_groups(n_max: int):
    """Yield (N, points, angles) for every representable N <= n_max, ascending.

    Enumerates the whole disk at once and groups by N; much cheaper
    than per-N enumeration for large ranges.
    """
    quads = []
    for a in range(1, isqrt(n_max) + 1):
        jmax = isqrt(n_max - a * a)
        b = np.arange(0, jmax + 1, dtype=np.int64)
        aa = np.full(b.shape, a, dtype=np.int64)
        quads.append(np.stack([aa, b], axis=1))
    quad = np.concatenate(quads)  # a >= 1, b >= 0: one per 90-degree rotation orbit
    rot = [quad, np.stack([-quad[:, 1], quad[:, 0]], axis=1)]
    rot.append(np.stack([-quad[:, 0], -quad[:, 1]], axis=1))
    rot.append(np.stack([quad[:, 1], -quad[:, 0]], axis=1))
    pts = np.concatenate(rot)
    nvals = pts[:, 0] ** 2 + pts[:, 1] ** 2
    ang = np.arctan2(pts[:, 1], pts[:, 0])
    ang = np.where(ang < 0.0, ang + 2.0 * pi, ang)
    order = np.lexsort((ang, nvals))
    nvals, pts, ang = nvals[order], pts[order], ang[order]
    boundaries = np.flatnonzero(np.diff(nvals)) + 1
    starts = np.concatenate(([0], boundaries))
    ends = np.concatenate((boundaries, [nvals.size]))
    for s, e in zip(starts.tolist(), ends.tolist()):
        yield int(nvals[s]), [tuple(p) for p in pts[s:e].tolist()], ang[s:e].tolist()


def conjecture_scan(n_max: int, beta: Fraction) -> list[ArcScanResult]:
    """Arc maxima for every N <= n_max with at least 2 circle points."""
    beta = Fraction(beta)
    if not 0 < beta < Fraction(1, 2):
        raise DomainError(f"beta must lie in (0, 1/2), got {beta}")
    if n_max < 1:
        raise DomainError(f"Nmax must be >= 1, got {n_max}")
    results: list[ArcScanResult] = []
    running = 0
    for n, points, angles in _all_circle_groups(n_max):
        theta = angular_width(n, beta)
        count, start = _sweep(points, angles, theta, n)
        running = max(running, count)
        results.append(
            ArcScanResult(
                n=n,
                beta=beta,
                arc_length=exp(float(beta) * log(n)),
                angular_width=theta,
                num_points=len(points),
                max_count=count,
                witness_start_angle=start,
                axis_count=_axis_count(points, n, beta),
                running_max=running,
            )
        )
    return results
