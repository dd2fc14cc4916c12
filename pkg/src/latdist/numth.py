"""Sum-of-two-squares arithmetic.

Representation counts r(k) in the quadrant convention (ordered pairs of
nonnegative integers), their prefix second moments, and the count of
integers representable as a sum of two squares.  Every fast path has a
brute-force oracle next to it.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

import numpy as np

from .errors import CapacityError, DomainError

# 4-byte sieve entries: ~1 GiB at the default ceiling.
DEFAULT_SIEVE_CEILING = 1 << 28
# rhat/landau tables hold a few arrays of `limit` int64 entries.
DEFAULT_TABLE_CEILING = 1 << 26

SIEVE_MAGIC = b"SPF1"


def r_bruteforce(k: int) -> int:
    """Number of ordered pairs (i, j), i, j >= 0, with i^2 + j^2 = k.

    The independent oracle for every other r computation in this module.
    """
    if k < 1:
        raise DomainError(f"r(k) requires k >= 1, got {k}")
    count = 0
    for i in range(isqrt(k) + 1):
        rem = k - i * i
        j = isqrt(rem)
        if j * j == rem:
            count += 1
    return count


@dataclass(frozen=True)
class SpfSieve:
    """Smallest-prime-factor table for 2..limit (index 0 and 1 unused)."""

    limit: int
    table: np.ndarray  # uint32, length limit + 1

    def spf(self, k: int) -> int:
        if not 2 <= k <= self.limit:
            raise DomainError(f"k={k} outside sieve range 2..{self.limit}")
        return int(self.table[k])

    def factorize(self, k: int) -> dict[int, int]:
        """Prime factorization of k via repeated smallest-factor division."""
        if not 1 <= k <= self.limit:
            raise DomainError(f"k={k} outside sieve range 1..{self.limit}")
        factors: dict[int, int] = {}
        while k > 1:
            p = int(self.table[k])
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            factors[p] = e
        return factors


def build_spf_sieve(limit: int, ceiling: int = DEFAULT_SIEVE_CEILING) -> SpfSieve:
    """Sieve of smallest prime factors up to `limit` inclusive."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > ceiling:
        raise CapacityError(f"sieve limit {limit} exceeds ceiling {ceiling}")
    table = np.zeros(limit + 1, dtype=np.uint32)
    for p in range(2, isqrt(limit) + 1):
        if table[p] == 0:
            seg = table[p * p :: p]
            seg[seg == 0] = p
    rest = table[2:]
    unmarked = rest == 0
    rest[unmarked] = np.arange(2, limit + 1, dtype=np.uint32)[unmarked]
    table.setflags(write=False)
    return SpfSieve(limit=limit, table=table)


def r_full_plane(k: int, sieve: SpfSieve) -> int:
    """r over all of Z^2: signed pairs (i, j) with i^2 + j^2 = k.

    Multiplicative rule: zero if any prime = 3 (mod 4) occurs to an odd
    power, else 4 * prod(e + 1) over primes = 1 (mod 4); powers of 2 are
    inert.
    """
    if k < 1:
        raise DomainError(f"r(k) requires k >= 1, got {k}")
    if k > sieve.limit:
        raise DomainError(f"k={k} exceeds sieve limit {sieve.limit}")
    count = 4
    for p, e in sieve.factorize(k).items():
        if p % 4 == 3:
            if e % 2 == 1:
                return 0
        elif p % 4 == 1:
            count *= e + 1
    return count


def r_fast(k: int, sieve: SpfSieve) -> int:
    """Quadrant r(k) from the sieve; must agree with r_bruteforce.

    Conversion from the full-plane count: each quadrant representation
    with i, j > 0 appears 4 times among sign choices, while a perfect
    square contributes the pair (0, sqrt(k)) on the axes, counted 4
    times in the plane but twice in the quadrant ((0, s) and (s, 0)).
    """
    full = r_full_plane(k, sieve)
    s = isqrt(k)
    return full // 4 + (1 if s * s == k else 0)


def _pair_keys(limit: int, skip_origin: bool = True) -> list[np.ndarray]:
    """Arrays of i^2 + j^2 <= limit over i, j >= 0, one array per i."""
    chunks = []
    for i in range(isqrt(limit) + 1):
        jmax = isqrt(limit - i * i)
        j = np.arange(0, jmax + 1, dtype=np.int64)
        keys = i * i + j * j
        if i == 0 and skip_origin:
            keys = keys[1:]
        chunks.append(keys)
    return chunks


def rvals_table(limit: int, ceiling: int = DEFAULT_TABLE_CEILING) -> np.ndarray:
    """r(k) for 0 <= k <= limit by direct pair accumulation (index 0 is 0)."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if limit > ceiling:
        raise CapacityError(f"table limit {limit} exceeds ceiling {ceiling}")
    keys = np.concatenate(_pair_keys(limit))
    counts = np.bincount(keys, minlength=limit + 1)
    return counts.astype(np.int64)


@dataclass(frozen=True)
class RhatTable:
    """r values and prefix sums of their squares, both indexed 1..limit."""

    limit: int
    rvals: np.ndarray  # int64, length limit + 1, index 0 unused
    rhat: np.ndarray  # int64, length limit + 1, rhat[k] = sum_{i<=k} r(i)^2

    def ratio(self, k: int) -> float:
        """rhat(k) / (k ln k), the quantity with a Theta(1) limit."""
        if not 2 <= k <= self.limit:
            raise DomainError(f"k={k} outside table range 2..{self.limit}")
        return float(self.rhat[k]) / (k * np.log(k))


def rhat_table(limit: int, ceiling: int = DEFAULT_TABLE_CEILING) -> RhatTable:
    rvals = rvals_table(limit, ceiling)
    sq = rvals * rvals
    rhat = np.cumsum(sq)
    if rhat[-1] < 0:
        raise CapacityError("rhat prefix sum overflowed int64")
    return RhatTable(limit=limit, rvals=rvals, rhat=rhat)


def landau_count(limit: int, ceiling: int = DEFAULT_TABLE_CEILING) -> int:
    """Count of 1 <= k <= limit expressible as a sum of two squares."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if limit > ceiling:
        raise CapacityError(f"limit {limit} exceeds ceiling {ceiling}")
    seen = np.zeros(limit + 1, dtype=bool)
    for keys in _pair_keys(limit):
        seen[keys] = True
    return int(np.count_nonzero(seen[1:]))


def landau_ratio(limit: int, count: int) -> float:
    """count * sqrt(ln limit) / limit, compared against the Landau density."""
    return count * float(np.sqrt(np.log(limit))) / limit


def get_sieve(limit: int, cache_dir: str | Path | None = None, ceiling: int = DEFAULT_SIEVE_CEILING) -> SpfSieve:
    """Sieve up to `limit`, via the cache directory when one is configured.

    cache_dir defaults to the LATDIST_CACHE_DIR environment variable; a
    corrupt cache file is rebuilt, not trusted.
    """
    import os

    if cache_dir is None:
        cache_dir = os.environ.get("LATDIST_CACHE_DIR")
    if cache_dir is None:
        return build_spf_sieve(limit, ceiling)
    path = Path(cache_dir) / f"spf_{limit}.bin"
    if path.exists():
        try:
            return load_sieve(path, ceiling)
        except DomainError:
            pass
    sieve = build_spf_sieve(limit, ceiling)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_sieve(sieve, path)
    return sieve


def save_sieve(sieve: SpfSieve, path: str | Path) -> None:
    """Write the cache format: 'SPF1', limit as u64 LE, entries 2..limit as u32 LE."""
    path = Path(path)
    entries = np.ascontiguousarray(sieve.table[2:], dtype="<u4")
    with open(path, "wb") as fh:
        fh.write(SIEVE_MAGIC)
        fh.write(struct.pack("<Q", sieve.limit))
        fh.write(entries.tobytes())


def load_sieve(path: str | Path, ceiling: int = DEFAULT_SIEVE_CEILING) -> SpfSieve:
    path = Path(path)
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != SIEVE_MAGIC:
            raise DomainError(f"bad sieve cache magic {magic!r} in {path}")
        (limit,) = struct.unpack("<Q", fh.read(8))
        if limit < 2 or limit > ceiling:
            raise DomainError(f"sieve cache limit {limit} invalid or above ceiling")
        raw = fh.read(4 * (limit - 1))
        if len(raw) != 4 * (limit - 1):
            raise DomainError(f"sieve cache {path} truncated")
    table = np.zeros(limit + 1, dtype=np.uint32)
    table[2:] = np.frombuffer(raw, dtype="<u4")
    sieve = SpfSieve(limit=int(limit), table=table)
    _spot_check(sieve)
    table.setflags(write=False)
    return sieve


def _spot_check(sieve: SpfSieve) -> None:
    """Cheap validity probe on a loaded cache before trusting it."""
    for k in (2, 3, min(9, sieve.limit), sieve.limit):
        if k < 2:
            continue
        p = int(sieve.table[k])
        if p < 2 or k % p != 0 or (p != k and p * p > k):
            raise DomainError(f"sieve cache fails spot check at k={k} (spf={p})")
