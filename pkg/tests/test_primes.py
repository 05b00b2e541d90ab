"""
Tests for the prime oracle, refereed by sympy.
"""
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sieve_lab.primes import PrimeOracle, is_prime, nth_prime, primes_oracle, primorial, simple_sieve


def test_small_primes_match_sympy():
    assert list(primes_oracle(5000)) == list(sympy.primerange(2, 5001))


def test_segmented_extension_matches_sympy():
    oracle = PrimeOracle(segment_size=97)
    assert list(oracle.primes_up_to(3000)) == list(sympy.primerange(2, 3001))
    assert oracle.nth_prime(1000) == 7919


def test_nth_prime_and_primorial():
    assert nth_prime(1) == 2
    assert nth_prime(6) == 13
    assert primorial(0) == 1
    assert primorial(3) == 30
    assert primorial(4) == 210
    with pytest.raises(ValueError):
        nth_prime(0)


def test_prime_index():
    oracle = PrimeOracle()
    assert oracle.prime_index(7) == 4
    with pytest.raises(ValueError):
        oracle.prime_index(9)


@pytest.mark.parametrize("n", [10**10 + 19, 10**10 + 21, (10**5 + 3) ** 2, 2**31 - 1])
def test_large_candidates_sieve_only_to_square_root(n):
    oracle = PrimeOracle()
    assert oracle.is_prime(n) == sympy.isprime(n)
    assert oracle.limit < n


def test_prime_index_beyond_cached_limit():
    oracle = PrimeOracle()
    assert oracle.prime_index(7919) == 1000
    assert oracle.limit >= 7919


def test_simple_sieve_edges():
    assert simple_sieve(1).tolist() == []
    assert simple_sieve(2).tolist() == [2]


@given(st.integers(-10, 200000))
@settings(max_examples=200)
def test_is_prime_agrees_with_sympy(n):
    assert is_prime(n) == sympy.isprime(n)
