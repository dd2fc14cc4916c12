import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latdist import numth
from latdist.errors import CapacityError, DomainError


def test_r_bruteforce_examples():
    assert numth.r_bruteforce(3) == 0
    assert numth.r_bruteforce(25) == 4  # (0,5),(3,4),(4,3),(5,0)
    assert numth.r_bruteforce(2) == 1  # (1,1)
    assert numth.r_bruteforce(1) == 2


def test_r_bruteforce_domain():
    with pytest.raises(DomainError):
        numth.r_bruteforce(0)


def test_spf_small():
    s = numth.build_spf_sieve(10)
    assert s.spf(9) == 3
    assert s.spf(7) == 7
    assert s.spf(10) == 2
    assert numth.build_spf_sieve(2).spf(2) == 2


def test_spf_invariants():
    limit = 5000
    s = numth.build_spf_sieve(limit)
    for k in range(2, limit + 1):
        p = s.spf(k)
        assert k % p == 0
        assert p * p <= k or p == k
        # p prime: no factor below it divides it
        assert all(p % d != 0 for d in range(2, int(p**0.5) + 1))


def test_spf_large_prime_spot_check():
    s = numth.build_spf_sieve(10**7)
    assert s.spf(9999991) == 9999991  # prime by trial division
    assert all(9999991 % d != 0 for d in range(2, 3163))


def test_sieve_capacity():
    with pytest.raises(CapacityError):
        numth.build_spf_sieve(10**7, ceiling=10**6)


def test_r_fast_examples():
    s = numth.build_spf_sieve(100)
    assert numth.r_fast(25, s) == 4
    assert numth.r_fast(1, s) == 2
    assert numth.r_fast(3, s) == 0
    assert numth.r_full_plane(25, s) == 12


def test_r_fast_exhaustive_small():
    s = numth.build_spf_sieve(3000)
    for k in range(1, 3001):
        assert numth.r_fast(k, s) == numth.r_bruteforce(k), k


def test_r_fast_out_of_range():
    s = numth.build_spf_sieve(10)
    with pytest.raises(DomainError):
        numth.r_fast(11, s)


SIEVE_1E5 = numth.build_spf_sieve(10**5)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**5))
def test_r_fast_matches_oracle(k):
    assert numth.r_fast(k, SIEVE_1E5) == numth.r_bruteforce(k)


def test_rhat_examples():
    t = numth.rhat_table(10)
    assert t.rvals[1:].tolist() == [2, 1, 0, 2, 2, 0, 0, 1, 2, 2]
    assert int(t.rhat[10]) == 22
    assert int(numth.rhat_table(1).rhat[1]) == 4


def test_rhat_invariants():
    t = numth.rhat_table(2000)
    assert np.all(np.diff(t.rhat[1:]) >= 0)
    diffs = t.rhat[2:] - t.rhat[1:-1]
    assert np.array_equal(diffs, t.rvals[2:] ** 2)
    for k in (7, 100, 1234, 2000):
        assert int(t.rvals[k]) == numth.r_bruteforce(k)


def test_landau_examples():
    assert numth.landau_count(10) == 7  # 1,2,4,5,8,9,10
    assert numth.landau_count(100) == 43
    assert numth.landau_count(1) == 1


def test_landau_monotone():
    counts = [numth.landau_count(n) for n in range(1, 300)]
    assert counts == sorted(counts)


def test_landau_against_bruteforce():
    for limit in (17, 50, 128):
        expected = sum(1 for k in range(1, limit + 1) if numth.r_bruteforce(k) > 0)
        assert numth.landau_count(limit) == expected


def test_sieve_cache_roundtrip(tmp_path):
    s = numth.build_spf_sieve(1000)
    path = tmp_path / "spf.bin"
    numth.save_sieve(s, path)
    loaded = numth.load_sieve(path)
    assert loaded.limit == 1000
    assert np.array_equal(loaded.table, s.table)


def test_sieve_cache_rejects_bad_magic(tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"NOPE" + b"\x00" * 32)
    with pytest.raises(DomainError):
        numth.load_sieve(path)


def test_sieve_cache_rejects_truncation(tmp_path):
    s = numth.build_spf_sieve(1000)
    path = tmp_path / "spf.bin"
    numth.save_sieve(s, path)
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(DomainError):
        numth.load_sieve(path)


def test_get_sieve_uses_cache(tmp_path):
    s1 = numth.get_sieve(500, cache_dir=tmp_path)
    assert (tmp_path / "spf_500.bin").exists()
    s2 = numth.get_sieve(500, cache_dir=tmp_path)
    assert np.array_equal(s1.table, s2.table)
