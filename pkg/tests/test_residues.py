"""
Tests for residue classes, sieving prefixes and regular sequences.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import prefixes
from sieve_lab.errors import (
    DuplicateClass,
    IndexOutOfRange,
    InvalidRegularParams,
    InvalidResidueClass,
    NonPrimeModulus,
    NotNonDecreasing,
    PrefixLengthMismatch,
    ResidueOutOfRange,
    TooManyClassesForPrime,
)
from sieve_lab.patterns import Pattern, average_density, fundamental_period, pattern_eval, regular_density
from sieve_lab.residues import (
    RegularParams,
    ResidueClass,
    model_contains,
    random_regular_prefix,
    regular_prefix,
    regular_prime_at,
    regular_primes,
    validate_prefix,
)

PERIOD_PRIMES = (2, 3, 5, 7, 11)
LARGE_PRIME = 10**10 + 19


def test_figure1_prefix_is_valid(figure1_prefix):
    assert figure1_prefix.length == 8
    assert figure1_prefix.primes == (3, 3, 5, 5, 7, 7, 11, 11)
    assert str(figure1_prefix.classes()[0]) == "[1]_3"


@pytest.mark.parametrize("primes, residues, error, index", [
    ((4,), (1,), NonPrimeModulus, 0),
    ((4,), (7,), NonPrimeModulus, 0),
    ((5, 3), (1, 1), NotNonDecreasing, 1),
    ((3,), (3,), ResidueOutOfRange, 0),
    ((3, 3, 3), (0, 1, 2), TooManyClassesForPrime, 2),
    ((2, 2), (0, 1), TooManyClassesForPrime, 1),
    ((3, 3), (1, 1), DuplicateClass, 1),
])
def test_validate_prefix_rejects(primes, residues, error, index):
    with pytest.raises(error) as exc:
        validate_prefix(primes, residues)
    assert exc.value.index == index


def test_validate_prefix_length_mismatch():
    with pytest.raises(PrefixLengthMismatch):
        validate_prefix((3, 5), (1,))


def test_prefix_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate_prefix((1,), (0,))


def test_empty_prefix_is_valid():
    assert validate_prefix((), ()).length == 0


def test_extend_and_truncate(figure1_prefix):
    shorter = figure1_prefix.truncate(3)
    assert shorter.primes == (3, 3, 5)
    assert shorter.extend(5, 0) == figure1_prefix.truncate(4)
    with pytest.raises(DuplicateClass):
        shorter.extend(5, 4)
    with pytest.raises(NotNonDecreasing):
        shorter.extend(3, 0)
    with pytest.raises(IndexOutOfRange):
        figure1_prefix.truncate(9)


@given(prefixes())
@settings(max_examples=50)
def test_truncations_of_valid_prefixes_stay_valid(prefix):
    for n in range(prefix.length + 1):
        truncated = prefix.truncate(n)
        assert validate_prefix(truncated.primes, truncated.residues) == truncated


def test_model_contains(figure1_prefix):
    assert model_contains(figure1_prefix, 1, 7)
    assert not model_contains(figure1_prefix, 1, 6)
    assert not model_contains(figure1_prefix, 0, 7)
    with pytest.raises(IndexOutOfRange):
        model_contains(figure1_prefix, 9, 7)


@given(prefixes(max_length=5, primes=PERIOD_PRIMES))
@settings(max_examples=25, deadline=None)
def test_models_are_nested(prefix):
    period = fundamental_period(Pattern(prefix))
    for n in range(prefix.length):
        for z in range(period):
            if model_contains(prefix, n, z):
                assert model_contains(prefix, n + 1, z)


@given(prefixes(max_length=5, primes=PERIOD_PRIMES), st.integers(-10**6, 10**6))
@settings(max_examples=100)
def test_model_contains_repeats_with_fundamental_period(prefix, z):
    for n in range(prefix.length + 1):
        period = fundamental_period(Pattern(prefix, n))
        assert model_contains(prefix, n, z) == model_contains(prefix, n, z + period)
        assert model_contains(prefix, n, z) == model_contains(prefix, n, z - period)


@given(prefixes(max_length=5, primes=PERIOD_PRIMES))
@settings(max_examples=25, deadline=None)
def test_model_contains_complements_pattern(prefix):
    for n in range(prefix.length + 1):
        pattern = Pattern(prefix, n)
        for z in range(fundamental_period(pattern)):
            assert int(model_contains(prefix, n, z)) == 1 - pattern_eval(pattern, z)


@pytest.mark.parametrize("alpha, kappa", [(2, 1), (2, 2), (4, 3), (3, 4)])
def test_regular_density_strictly_decreases(alpha, kappa):
    params = RegularParams(alpha, kappa)
    densities = [regular_density(params, n) for n in range(13)]
    for before, after in zip(densities, densities[1:]):
        assert after < before


def test_prefix_density_strictly_decreases(figure1_prefix):
    densities = [average_density(Pattern(figure1_prefix, n)) for n in range(figure1_prefix.length + 1)]
    for before, after in zip(densities, densities[1:]):
        assert after < before


def test_residue_class():
    assert ResidueClass(3, 7).contains(17)
    assert not ResidueClass(3, 7).contains(18)
    with pytest.raises(InvalidResidueClass):
        ResidueClass(1, 9)
    with pytest.raises(InvalidResidueClass):
        ResidueClass(7, 7)


def test_regular_params_validation():
    RegularParams(2, 2)
    with pytest.raises(InvalidRegularParams):
        RegularParams(1, 2)
    with pytest.raises(InvalidRegularParams):
        RegularParams(0, 1)


def test_regular_prime_sequence():
    params = RegularParams(2, 2)
    assert [regular_prime_at(params, i) for i in range(1, 8)] == [3, 3, 5, 5, 7, 7, 11]
    assert regular_primes(RegularParams(4, 3), 4) == (7, 7, 7, 11)
    with pytest.raises(IndexOutOfRange):
        regular_prime_at(params, 0)


@pytest.mark.parametrize("alpha, kappa, i, expected", [
    (4, 3, 7, 13),
    (4, 3, 1, 7),
    (4, 3, 4, 11),
    (2, 1, 1, 3),
    (2, 2, 3, 5),
])
def test_regular_prime_at(alpha, kappa, i, expected):
    assert regular_prime_at(RegularParams(alpha, kappa), i) == expected


def test_regular_params_detection(figure1_prefix):
    assert figure1_prefix.regular_params() == RegularParams(2, 2)
    assert validate_prefix((3, 5, 5), (0, 0, 1)).regular_params() is None
    assert validate_prefix((), ()).regular_params() is None


def test_large_prime_prefix_validates_without_full_sieve():
    prefix = validate_prefix((LARGE_PRIME,), (0,))
    assert prefix.primes == (LARGE_PRIME,)
    assert prefix.regular_params() is None


def test_regular_prefix_matches_figure1(figure1_prefix):
    assert regular_prefix(RegularParams(2, 2), figure1_prefix.residues) == figure1_prefix


def test_random_regular_prefix_is_reproducible():
    params = RegularParams(2, 1)
    first = random_regular_prefix(params, 50, seed=7)
    assert first == random_regular_prefix(params, 50, seed=7)
    assert first.regular_params() == params


@given(st.integers(0, 2**64 - 1), st.sampled_from([(2, 1), (2, 2), (4, 3), (3, 4)]))
@settings(max_examples=50)
def test_random_regular_prefix_is_valid_and_regular(seed, alpha_kappa):
    params = RegularParams(*alpha_kappa)
    prefix = random_regular_prefix(params, 24, seed)
    assert prefix.primes == regular_primes(params, 24)
    for p, residues in prefix.groups():
        assert len(residues) == prefix.primes.count(p)
