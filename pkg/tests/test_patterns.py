"""
Tests for sieving patterns, periods, densities and the Eratosthenes window.
"""
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import prefixes
from sieve_lab.errors import DegenerateDenominator, IndexOutOfRange, PeriodCapExceeded
from sieve_lab.patterns import (
    DensityValue,
    Pattern,
    _raw_regular_density,
    average_density,
    count_unsieved,
    eratosthenes_eval,
    eratosthenes_pattern,
    eratosthenes_window,
    fundamental_period,
    materialize_period,
    pattern_eval,
    regular_density,
    regular_density_divisible,
    regular_density_sequence,
    regular_period,
)
from sieve_lab.residues import RegularParams, regular_prefix, regular_prime_at

FIGURE1_DENSITIES = [Fraction(2, 3), Fraction(1, 3), Fraction(4, 15), Fraction(1, 5),
                     Fraction(6, 35), Fraction(1, 7), Fraction(10, 77), Fraction(9, 77)]


def minimal_period(bits: np.ndarray) -> int:
    n = len(bits)
    for t in range(1, n + 1):
        if n % t == 0 and np.array_equal(bits, np.tile(bits[:t], n // t)):
            return t
    return n


def test_figure1_bottom_row(figure1_prefix):
    pattern = Pattern(figure1_prefix, 8)
    bits = [pattern_eval(pattern, z) for z in range(1, 39)]
    assert bits[2] == 1 and bits[35] == 1
    assert all(bit == 0 for bit in bits[3:35])


def test_depth_zero_is_all_ones(figure1_prefix):
    pattern = Pattern(figure1_prefix, 0)
    assert all(pattern(z) == 1 for z in range(-5, 40))
    assert fundamental_period(pattern) == 1
    assert average_density(pattern).value == 1


def test_depth_out_of_range(figure1_prefix):
    with pytest.raises(IndexOutOfRange):
        Pattern(figure1_prefix, 9)


def test_figure1_period_and_density(figure1_prefix):
    for n, expected in enumerate(FIGURE1_DENSITIES, start=1):
        assert average_density(Pattern(figure1_prefix, n)).value == expected
    assert fundamental_period(Pattern(figure1_prefix, 8)) == 1155
    assert str(average_density(Pattern(figure1_prefix, 8))) == "9/77"


def test_pattern_is_periodic(figure1_prefix):
    pattern = Pattern(figure1_prefix, 6)
    period = fundamental_period(pattern)
    assert all(pattern(z) == pattern(z + period) for z in range(-50, 200))


def test_count_unsieved_is_density_times_period(figure1_prefix):
    for n in range(9):
        pattern = Pattern(figure1_prefix, n)
        assert count_unsieved(pattern) == average_density(pattern).value * fundamental_period(pattern)


@given(prefixes())
@settings(max_examples=60, deadline=None)
def test_materialised_period_matches_brute_force(prefix):
    pattern = Pattern(prefix)
    bits = materialize_period(pattern)
    assert [int(b) for b in bits] == [pattern(z) for z in range(1, len(bits) + 1)]
    assert int(bits.sum()) == average_density(pattern).value * fundamental_period(pattern)
    assert minimal_period(bits) == fundamental_period(pattern)


def test_period_cap(figure1_prefix):
    with pytest.raises(PeriodCapExceeded):
        materialize_period(Pattern(figure1_prefix), cap=1000)


def test_density_value_views():
    density = DensityValue(Fraction(1, 3))
    assert density.complement == Fraction(2, 3)
    assert density.mean_gap == 3
    assert (density.numerator, density.denominator) == (1, 3)


@pytest.mark.parametrize("alpha, kappa", [(2, 1), (2, 2), (4, 3), (1, 1)])
def test_regular_closed_forms_match_patterns(alpha, kappa):
    params = RegularParams(alpha, kappa)
    prefix = regular_prefix(params, _first_residues(params, 10))
    sequence = list(regular_density_sequence(params, 10))
    for n in range(1, 11):
        pattern = Pattern(prefix, n)
        assert regular_period(params, n) == fundamental_period(pattern)
        assert regular_density(params, n) == average_density(pattern)
        assert sequence[n - 1] == regular_density(params, n)
        if n % kappa == 0:
            assert regular_density_divisible(params, n) == regular_density(params, n)


def _first_residues(params, length):
    # residues 0, 1, 2, ... restarting at every new prime
    residues, previous, count = [], None, 0
    for i in range(1, length + 1):
        p = regular_prime_at(params, i)
        count = count + 1 if p == previous else 0
        residues.append(count)
        previous = p
    return residues


def test_regular_density_examples():
    params = RegularParams(2, 2)
    assert [regular_density(params, n).value for n in range(1, 9)] == FIGURE1_DENSITIES
    assert regular_density(params, 0).value == 1
    with pytest.raises(ValueError):
        regular_density_divisible(params, 3)


def test_degenerate_density_denominator():
    with pytest.raises(DegenerateDenominator):
        _raw_regular_density(1, 2, 2)


def test_eratosthenes_counts():
    pattern = eratosthenes_pattern(3)
    assert sum(pattern(z) for z in range(1, 31)) == 8
    assert eratosthenes_eval(3, 7) == 1
    assert eratosthenes_eval(3, 25) == 0


def test_eratosthenes_window_example():
    window = eratosthenes_window(5)
    assert window.bounds() == (2, 168)
    assert 168 in window and 169 not in window
    with pytest.raises(IndexOutOfRange):
        eratosthenes_window(0)


@pytest.mark.parametrize("n", range(1, 16))
def test_eratosthenes_window_survivors_are_prime(n):
    window = eratosthenes_window(n)
    survivors = window.survivors()
    assert all(sympy.isprime(z) for z in survivors)
    expected = [p for p in sympy.primerange(window.lo, window.hi + 1) if p > sympy.prime(n)]
    assert survivors == expected
