"""
Brute-force value recursion for T^k(1), independent of the σ pipeline.

    G_0(x) = 1
    G_k(x) = G_{k-1}(x) + sum_i sum_{j=0}^{x_i - 1} G_{k-1}(x with x_i -> j)

G_k is symmetric, so values are memoized on the sorted (non-increasing)
exponent vector. With m = k+3 entries, G_k(x) = γ_{k+3}(x).
"""
import logging
import threading
from collections import Counter
from math import factorial
from typing import Dict, Optional, Sequence, Tuple

from src.gating.validator import InputValidator, OracleRangeError

logger = logging.getLogger(__name__)

OrbitKey = Tuple[int, ...]


def canonical_key(x: Sequence[int]) -> OrbitKey:
    """Sorted non-increasing representative of the Σ_m-orbit of x."""
    return tuple(sorted(x, reverse=True))


def orbit_size(key: Sequence[int]) -> int:
    """Number of distinct permutations of key."""
    size = factorial(len(key))
    for count in Counter(key).values():
        size //= factorial(count)
    return size


class GammaCache:
    """
    Memo table (k, canonical key) -> G_k value.

    Reads are lock-free; inserts take a lock. Values are deterministic,
    so concurrent inserts of the same key store the same value.
    """

    def __init__(self):
        self._memo: Dict[Tuple[int, OrbitKey], int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, item: Tuple[int, OrbitKey]) -> bool:
        return item in self._memo

    def get(self, k: int, key: OrbitKey) -> Optional[int]:
        if k == 0:
            return 1
        return self._memo.get((k, key))

    def put(self, k: int, key: OrbitKey, value: int) -> int:
        with self._lock:
            return self._memo.setdefault((k, key), value)


def _value(k: int, key: OrbitKey, cache: GammaCache) -> int:
    cached = cache.get(k, key)
    if cached is not None:
        return cached
    total = _value(k - 1, key, cache)
    for i, xi in enumerate(key):
        # Equal entries give identical inner sums; count the first of each run.
        if i > 0 and key[i - 1] == xi:
            continue
        multiplicity = key.count(xi)
        rest = key[:i] + key[i + 1:]
        inner = sum(_value(k - 1, canonical_key(rest + (j,)), cache) for j in range(xi))
        total += multiplicity * inner
    return cache.put(k, key, total)


def oracle_value(k: int, x: Sequence[int], cache: Optional[GammaCache] = None) -> int:
    """
    G_k(x) by memoized recursion.

    Args:
        k: Number of T steps, k >= 0
        x: m non-negative exponents with m >= k+1
        cache: Shared memo table; a fresh one is used if omitted

    Returns:
        The non-negative integer G_k(x)

    Raises:
        OracleRangeError: If m <= k
        ValidationError: On negative or non-integer entries
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise OracleRangeError(f"Step count must be a non-negative integer, got {k!r}")
    values = InputValidator.validate_exponents(x)
    if len(values) <= k:
        raise OracleRangeError(
            f"Oracle needs more than {k} variables for {k} steps, got {len(values)}"
        )
    cache = cache if cache is not None else GammaCache()
    return _value(k, canonical_key(values), cache)
