"""
Prime oracle module for the sieve laboratory.

This module contains the PrimeOracle class, a segmented sieve of Eratosthenes
over numpy boolean segments. It decides every primality claim the package
makes and shares no code with the residue-class pattern machinery in
patterns.py.
"""
import bisect
import math
import threading
from typing import List, Tuple

import numpy as np

from sieve_lab.constants import ORACLE_INITIAL_LIMIT, ORACLE_SEGMENT_SIZE


def simple_sieve(limit: int) -> np.ndarray:
    """
    Return all primes <= limit with a plain (unsegmented) sieve.

    Args:
        limit: Upper bound, inclusive

    Returns:
        Ascending int64 array of primes
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p: limit + 1: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_segment(low: int, high: int, base: np.ndarray) -> List[int]:
    """
    Return the primes in [low, high) using base primes up to sqrt(high).

    Args:
        low: First position of the segment (>= 2)
        high: One past the last position of the segment
        base: Ascending primes covering at least sqrt(high - 1)

    Returns:
        Ascending list of primes in the segment
    """
    if high <= low:
        return []
    mask = np.ones(high - low, dtype=bool)
    for p in base.tolist():
        p2 = p * p
        if p2 >= high:
            break
        start = max(p2, ((low + p - 1) // p) * p)
        mask[start - low:: p] = False
    return (np.flatnonzero(mask) + low).tolist()


class PrimeOracle:
    """
    Deterministic, lazily extended list of primes.

    The cache only ever grows by appending freshly sieved segments, so every
    answer equals what a fresh sieve up to the same limit would give.
    """

    def __init__(self, segment_size: int = ORACLE_SEGMENT_SIZE) -> None:
        """
        Initialise an oracle with primes up to ORACLE_INITIAL_LIMIT.

        Args:
            segment_size: Number of positions sieved per numpy segment
        """
        self.segment_size = segment_size
        self._lock = threading.Lock()
        self._limit = ORACLE_INITIAL_LIMIT
        self._primes: List[int] = simple_sieve(ORACLE_INITIAL_LIMIT).tolist()

    @property
    def limit(self) -> int:
        """The largest position the cache currently covers."""
        return self._limit

    def _extend_to(self, limit: int) -> None:
        # caller holds the lock
        if limit <= self._limit:
            return
        base = simple_sieve(math.isqrt(limit) + 1)
        low = self._limit + 1
        while low <= limit:
            high = min(low + self.segment_size, limit + 1)
            self._primes.extend(sieve_segment(low, high, base))
            low = high
        self._limit = limit

    def primes_up_to(self, limit: int) -> Tuple[int, ...]:
        """
        Return exactly the primes <= limit, ascending.

        Args:
            limit: Upper bound, inclusive

        Returns:
            Tuple of primes
        """
        with self._lock:
            self._extend_to(limit)
            end = bisect.bisect_right(self._primes, limit)
            return tuple(self._primes[:end])

    def nth_prime(self, k: int) -> int:
        """
        Return p_k, the k-th prime (p_1 = 2).

        Args:
            k: 1-based index

        Returns:
            The k-th prime
        """
        if k < 1:
            raise ValueError(f"prime index must be >= 1, got {k}")
        with self._lock:
            while len(self._primes) < k:
                self._extend_to(2 * self._limit)
            return self._primes[k - 1]

    def first_primes(self, k: int) -> Tuple[int, ...]:
        """Return (p_1, ..., p_k)."""
        if k <= 0:
            return ()
        self.nth_prime(k)
        with self._lock:
            return tuple(self._primes[:k])

    def is_prime(self, n: int) -> bool:
        """
        Check primality of n.

        Inside the cached limit this is a lookup. Beyond it the cache grows
        only to isqrt(n) and n is trial-divided by the cached primes.
        """
        if n < 2:
            return False
        with self._lock:
            if n <= self._limit:
                i = bisect.bisect_left(self._primes, n)
                return i < len(self._primes) and self._primes[i] == n
            root = math.isqrt(n)
            self._extend_to(root)
            end = bisect.bisect_right(self._primes, root)
            return all(n % p for p in self._primes[:end])

    def prime_index(self, p: int) -> int:
        """
        Return k such that p = p_k.

        Raises:
            ValueError: If p is not prime
        """
        if not self.is_prime(p):
            raise ValueError(f"{p} is not prime")
        with self._lock:
            self._extend_to(p)
            return bisect.bisect_left(self._primes, p) + 1

    def primorial(self, k: int) -> int:
        """Return p_k#, the product of the first k primes (1 for k = 0)."""
        return math.prod(self.first_primes(k))


_default_oracle = PrimeOracle()


def default_oracle() -> PrimeOracle:
    """Return the process-wide shared oracle."""
    return _default_oracle


def primes_oracle(limit: int) -> Tuple[int, ...]:
    """
    Return the ascending primes <= limit.

    Args:
        limit: Upper bound, inclusive (>= 2)

    Returns:
        Tuple of primes
    """
    return _default_oracle.primes_up_to(limit)


def nth_prime(k: int) -> int:
    """Return the k-th prime from the shared oracle."""
    return _default_oracle.nth_prime(k)


def is_prime(n: int) -> bool:
    """Check primality with the shared oracle."""
    return _default_oracle.is_prime(n)


def primorial(k: int) -> int:
    """Return the product of the first k primes."""
    return _default_oracle.primorial(k)
