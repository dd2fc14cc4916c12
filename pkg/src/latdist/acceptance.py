"""Acceptance suite: every verifiable claim, checked at desk scale.

Each criterion is a standalone function returning a CriterionResult
with the measured values embedded, so a failure is diagnosable from the
summary line alone.  `fast` covers the exact-identity criteria that run
in seconds; `full` adds the large-scale stability bands.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import log

from . import arcs, diststats, numth, rectlat


@dataclass(frozen=True)
class CriterionResult:
    id: int
    name: str
    passed: bool
    measured: str
    seconds: float


def _run(cid: int, name: str, fn) -> CriterionResult:
    start = time.perf_counter()
    passed, measured = fn()
    return CriterionResult(cid, name, passed, measured, time.perf_counter() - start)


def criterion_1() -> CriterionResult:
    """Histogram and energy fast paths equal their brute-force oracles."""

    def check():
        for w in range(2, 13):
            for h in range(2, 13):
                grid = [(x, y) for x in range(w) for y in range(h)]
                if diststats.histogram_rect_fast(w, h).as_dict() != diststats.histogram_bruteforce(grid).as_dict():
                    return False, f"histogram mismatch at {w}x{h}"
        corpus = [
            [(x, y) for x in range(4) for y in range(4)],
            [(x, y) for x in range(2) for y in range(8)],
            diststats.lshape_points(8),
            diststats.lshape_points(3),
        ]
        rng = random.Random(20250823)
        while len(corpus) < 54:
            pts = {(rng.randrange(-20, 21), rng.randrange(-20, 21)) for _ in range(16)}
            if len(pts) >= 2:
                corpus.append(sorted(pts))
        for pts in corpus:
            stats = diststats.quadruple_stats(diststats.histogram_bruteforce(pts))
            if diststats.quadruple_bruteforce(pts) != stats.energy:
                return False, f"energy mismatch on {len(pts)}-point set"
        return True, f"{11 * 11} grids + {len(corpus)} point sets, all exact"

    return _run(1, "oracle equivalence (histograms, energy)", check)


def criterion_2() -> CriterionResult:
    """r_fast(k) = r_bruteforce(k) exhaustively for k <= 1e5."""

    def check():
        limit = 10**5
        sieve = numth.get_sieve(limit)
        for k in range(1, limit + 1):
            if numth.r_fast(k, sieve) != numth.r_bruteforce(k):
                return False, f"mismatch at k={k}"
        return True, f"exhaustive k <= {limit}"

    return _run(2, "r-function equivalence", check)


IDENTITY_GRID = [
    (n, Fraction(p, q))
    for n in (1 << 12, 1 << 16, 1 << 20)
    for p, q in ((3, 10), (7, 20), (2, 5), (9, 20))
]


def criterion_3() -> CriterionResult:
    """Sum identities hold exactly over the alpha x n grid."""

    def check():
        done = 0
        for n, alpha in IDENTITY_GRID:
            try:
                spec = rectlat.build_spec(n, alpha)
            except rectlat.DomainError:
                continue  # sublattice empty below n0(alpha)
            rectlat.verify_identities(rectlat.rep_counts(spec))
            done += 1
        return done > 0, f"{done} (n, alpha) cells verified exactly"

    return _run(3, "representation identities", check)


def criterion_4() -> CriterionResult:
    """Four-number lemma, exhaustive over all factorization pairs, m <= 2e4."""

    def check():
        limit = 2 * 10**4
        divisors: list[list[int]] = [[] for _ in range(limit + 1)]
        for d in range(1, limit + 1):
            for m in range(d, limit + 1, d):
                divisors[m].append(d)
        tuples = 0
        for m in range(1, limit + 1):
            for m1 in divisors[m]:
                m2 = m // m1
                for m3 in divisors[m]:
                    rectlat.four_number_lemma(m1, m2, m3, m // m3)
                    tuples += 1
        return True, f"{tuples} factorization pairs decomposed and verified"

    return _run(4, "four-number lemma (exhaustive)", check)


def criterion_5() -> CriterionResult:
    """Distinct distances of the alpha=2/5 lattice approach n from below."""

    def check():
        alpha = Fraction(2, 5)
        ratios = []
        for n in (1 << 14, 1 << 17, 1 << 20):
            spec = rectlat.build_spec(n, alpha)
            ratios.append(rectlat.distinct_distances_rect(spec) / n)
        gaps = [abs(r - 1.0) for r in ratios]
        ok = gaps[0] >= gaps[1] >= gaps[2] and 0.85 <= ratios[-1] <= 1.02
        return ok, f"D/n = {['%.5f' % r for r in ratios]}"

    return _run(5, "rectangular distinct-distance band", check)


def criterion_6() -> CriterionResult:
    """S(n, alpha) stays within a bounded multiple of n^(2a) log^2 n."""

    def check():
        details = []
        ok = True
        for p, q in ((3, 10), (2, 5)):
            alpha = Fraction(p, q)
            normed = []
            for n in (1 << 14, 1 << 16, 1 << 18, 1 << 20):
                spec = rectlat.build_spec(n, alpha)
                s, _ = rectlat.sum_binom_d2(rectlat.rep_counts(spec))
                normed.append(s / (spec.interval_scale * log(n) ** 2))
            spread = max(normed) / min(normed)
            details.append(f"alpha={alpha}: spread {spread:.3f}")
            ok = ok and spread <= 4.0
        return ok, "; ".join(details)

    return _run(6, "second-moment growth band", check)


def criterion_7() -> CriterionResult:
    """rhat(k)/(k ln k) varies < 10% between successive checkpoints."""

    def check():
        table = numth.rhat_table(1 << 24)
        ratios = [table.ratio(k) for k in (1 << 20, 1 << 22, 1 << 24)]
        steps = [abs(b / a - 1.0) for a, b in zip(ratios, ratios[1:])]
        ok = all(s < 0.10 for s in steps)
        return ok, f"ratios {['%.5f' % r for r in ratios]}, steps {['%.4f' % s for s in steps]}"

    return _run(7, "prefix second-moment band", check)


def criterion_8() -> CriterionResult:
    """Sum-of-two-squares density: count sqrt(ln N)/N in [0.70, 1.00], non-increasing."""

    def check():
        ratios = []
        for lim in (1 << 20, 1 << 22, 1 << 24):
            ratios.append(numth.landau_ratio(lim, numth.landau_count(lim)))
        ok = all(0.70 <= r <= 1.00 for r in ratios) and ratios[0] >= ratios[1] >= ratios[2]
        return ok, f"ratios {['%.5f' % r for r in ratios]}"

    return _run(8, "representable-density band", check)


def criterion_9() -> CriterionResult:
    """Square-lattice energy tracks N^3 ln N; gap ratio tracks sqrt(ln N)."""

    def check():
        energies = []
        gaps = []
        for m in (256, 512, 1024, 2048):
            rep = diststats.square_lattice_report(m)
            energies.append(rep.energy_over_n3logn)
            gaps.append(rep.gap_over_sqrtlog)
        e_spread = max(energies) / min(energies)
        g_spread = max(gaps) / min(gaps)
        ok = e_spread <= 1.5 and g_spread <= 1.3
        return ok, f"energy spread {e_spread:.3f}, gap spread {g_spread:.3f}"

    return _run(9, "square-lattice energy tightness", check)


def criterion_10() -> CriterionResult:
    """Interior-circle bound on class sizes for the 1000 x 1000 grid."""

    def check():
        m = 1000
        n_points = m * m
        h = diststats.histogram_rect_fast(m, m)
        cutoff = (m // 10) ** 2
        sieve = numth.get_sieve(cutoff)
        checked = 0
        for t in range(1, cutoff + 1):
            count = h.count(t)
            if count == 0:
                continue
            full = numth.r_full_plane(t, sieve)
            if not 0.64 * n_points * full <= count <= n_points * full:
                return False, f"bound fails at t={t}: count={count}, r={full}"
            checked += 1
        return True, f"{checked} distance classes within [0.64 N r, N r]"

    return _run(10, "interior-circle class bound", check)


def criterion_11() -> CriterionResult:
    """L-shape: cubic trivial energy, gap ratio doubling per n doubling."""

    def check():
        grid = (1 << 10, 1 << 12, 1 << 14)
        reports = {n: diststats.lshape_report(n) for n in grid}
        doubled = {n: diststats.lshape_report(2 * n) for n in grid}
        trivial = [r.trivial_energy / r.n**3 for r in reports.values()]
        t_spread = max(trivial) / min(trivial)
        growth = [doubled[n].gap_ratio / reports[n].gap_ratio for n in grid]
        ok = t_spread <= 1.3 and all(1.6 <= g <= 2.2 for g in growth)
        return ok, f"trivial spread {t_spread:.3f}, gap growth at 2n {['%.3f' % g for g in growth]}"

    return _run(11, "L-shape discrepancy band", check)


def criterion_12() -> CriterionResult:
    """Arc sweep equals the window oracle; short arcs hold <= 2 points."""

    def check():
        betas = (Fraction(1, 6), Fraction(1, 4), Fraction(2, 5))
        for n, points, angles in arcs._all_circle_groups(10**4):
            for beta in betas:
                theta = arcs.angular_width(n, beta)
                swept, _ = arcs._sweep(points, angles, theta, n)
                brute = arcs.brute_arc_count(points, angles, theta, n)
                if swept != brute:
                    return False, f"sweep {swept} != oracle {brute} at N={n}, beta={beta}"
        results = arcs.conjecture_scan(1 << 20, Fraction(1, 6))
        overall = results[-1].running_max if results else 0
        if overall > 2:
            return False, f"short-arc maximum {overall} > 2"
        return True, f"oracle match to 1e4; max over N<=2^20 at beta=1/6 is {overall}"

    return _run(12, "arc explorer", check)


ALL_CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
]

FAST_IDS = {1, 2, 4, 10}


def run_suite(suite: str = "fast") -> list[CriterionResult]:
    if suite not in ("fast", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for i, fn in enumerate(ALL_CRITERIA, start=1):
        if suite == "fast" and i not in FAST_IDS:
            continue
        results.append(fn())
    return results
