import random
from fractions import Fraction

import pytest

from latdist import diststats
from latdist.errors import CapacityError, DomainError


def grid(w, h):
    return [(x, y) for x in range(w) for y in range(h)]


def test_bruteforce_examples():
    assert diststats.histogram_bruteforce(grid(2, 2)).as_dict() == {1: 8, 2: 4}
    assert diststats.histogram_bruteforce([(0, 0), (3, 4)]).as_dict() == {25: 2}
    assert diststats.histogram_bruteforce([(0, 0), (1, 0), (2, 0)]).as_dict() == {1: 4, 4: 2}


def test_bruteforce_rejects_duplicates():
    with pytest.raises(DomainError):
        diststats.histogram_bruteforce([(0, 0), (0, 0), (1, 1)])


def test_rect_fast_examples():
    assert diststats.histogram_rect_fast(2, 2).as_dict() == {1: 8, 2: 4}
    h = diststats.histogram_rect_fast(3, 3)
    assert h.as_dict() == {1: 24, 2: 16, 4: 12, 5: 16, 8: 4}
    assert h.total_ordered_pairs == 72
    assert diststats.histogram_rect_fast(2, 1).as_dict() == {1: 2}


def test_rect_fast_matches_bruteforce():
    for w in range(2, 9):
        for h in range(1, 7):
            assert diststats.histogram_rect_fast(w, h).as_dict() == diststats.histogram_bruteforce(grid(w, h)).as_dict(), (w, h)


def test_histogram_invariants():
    rng = random.Random(7)
    for _ in range(20):
        pts = sorted({(rng.randrange(-9, 10), rng.randrange(-9, 10)) for _ in range(12)})
        h = diststats.histogram_bruteforce(pts)
        n = len(pts)
        assert h.total_ordered_pairs == n * n - n
        for key, count in h.items():
            assert key > 0
            assert count > 0 and count % 2 == 0


def test_quadruple_stats_examples():
    s = diststats.quadruple_stats(DH({1: 8, 2: 4}))
    assert (s.distinct, s.energy, s.cs_bound) == (2, 80, Fraction(72))
    assert s.gap_ratio == pytest.approx(10 / 9)
    s1 = diststats.quadruple_stats(DH({25: 2}))
    assert (s1.distinct, s1.energy, s1.cs_bound, s1.gap_ratio) == (1, 4, Fraction(4), 1.0)
    s3 = diststats.quadruple_stats(diststats.histogram_rect_fast(3, 3))
    assert (s3.distinct, s3.energy) == (5, 1248)
    assert float(s3.cs_bound) == pytest.approx(1036.8)


def DH(d):
    return diststats.DistanceHistogram.from_dict(d)


def test_quadruple_bruteforce_examples():
    assert diststats.quadruple_bruteforce(grid(2, 2)) == 80
    assert diststats.quadruple_bruteforce([(0, 0), (1, 2)]) == 4
    assert diststats.quadruple_bruteforce(grid(3, 3)) == 1248


def test_quadruple_bruteforce_matches_energy():
    rng = random.Random(42)
    corpus = [grid(4, 4), grid(2, 6), diststats.lshape_points(5)]
    for _ in range(10):
        pts = sorted({(rng.randrange(-15, 16), rng.randrange(-15, 16)) for _ in range(14)})
        corpus.append(pts)
    for pts in corpus:
        stats = diststats.quadruple_stats(diststats.histogram_bruteforce(pts))
        assert diststats.quadruple_bruteforce(pts) == stats.energy


def test_cauchy_schwarz_gap():
    rng = random.Random(3)
    for _ in range(30):
        pts = sorted({(rng.randrange(-20, 21), rng.randrange(-20, 21)) for _ in range(10)})
        if len(pts) < 2:
            continue
        s = diststats.quadruple_stats(diststats.histogram_bruteforce(pts))
        assert s.gap_ratio >= 1.0 - 1e-12
        assert s.energy >= s.cs_bound
    # equality exactly when all class sizes agree
    assert diststats.quadruple_stats(DH({3: 4, 7: 4})).gap_ratio == 1.0


def test_energy_exact_summation_matches_python():
    h = diststats.histogram_rect_fast(60, 60)
    expected = sum(c * c for _, c in h.items())
    assert h.energy() == expected


def test_square_lattice_report():
    rep = diststats.square_lattice_report(2)
    assert (rep.n_points, rep.stats.distinct, rep.stats.energy) == (4, 2, 80)
    rep3 = diststats.square_lattice_report(3)
    assert (rep3.n_points, rep3.stats.distinct, rep3.stats.energy) == (9, 5, 1248)


def test_rect_fast_capacity():
    with pytest.raises(CapacityError):
        diststats.histogram_rect_fast(10**5, 10**5, ceiling=10**6)


def test_lshape_small_matches_bruteforce():
    for n in (1, 2, 3, 5, 8, 13, 40):
        rep = diststats.lshape_report(n)
        h = diststats.histogram_bruteforce(diststats.lshape_points(n), ceiling=200)
        stats = diststats.quadruple_stats(h)
        assert rep.distinct == stats.distinct, n
        assert rep.energy == stats.energy, n
        assert rep.cs_bound == stats.cs_bound, n
        # trivial energy recomputed from the oracle histogram
        trivial = sum(h.count(i * i) ** 2 for i in range(1, n // 2 + 1))
        assert rep.trivial_energy == trivial, n


def test_lshape_examples():
    rep = diststats.lshape_report(2)
    assert rep.distinct == 4
    assert diststats.lshape_report(1).distinct == 1


def test_lshape_pythagorean_merge():
    # n=5: cross pair (3,4) hits distance 5, merging with intra-axis class 25
    rep = diststats.lshape_report(5)
    assert rep.cross_integer_pairs == 4  # (3,4) and (4,3), 2 ordered pairs each
    h = diststats.histogram_bruteforce(diststats.lshape_points(5))
    assert h.count(25) == 4
    assert rep.energy >= rep.trivial_energy


def test_lshape_invariants():
    for n in (4, 16, 64):
        rep = diststats.lshape_report(n)
        assert rep.gap_ratio >= 1.0
        assert rep.energy >= rep.trivial_energy
        assert rep.axis_pair_total + rep.cross_pair_total == rep.point_count**2 - rep.point_count
