"""
Patterns module for the sieve laboratory.

This module contains the sieving pattern (the indicator of positions left
unsieved by the first n classes), its exact fundamental period and average
density, the closed forms for (alpha, kappa)-regular patterns, and the
Eratosthenes pattern with its primality window.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np

from sieve_lab.constants import DEFAULT_PERIOD_CAP
from sieve_lab.errors import DegenerateDenominator, IndexOutOfRange, PeriodCapExceeded
from sieve_lab.primes import default_oracle, primes_oracle
from sieve_lab.residues import (
    ClassGroups,
    RegularParams,
    SievingPrefix,
    validate_prefix,
)

__all__ = [
    "DensityValue",
    "EratosthenesWindow",
    "Pattern",
    "average_density",
    "count_unsieved",
    "eratosthenes_eval",
    "eratosthenes_pattern",
    "eratosthenes_window",
    "fundamental_period",
    "materialize_period",
    "pattern_eval",
    "primes_oracle",
    "regular_density",
    "regular_density_divisible",
    "regular_density_sequence",
    "regular_period",
]


@dataclass(frozen=True, order=True)
class DensityValue:
    """
    An exact density in [0, 1], kept as a reduced fraction.

    Attributes:
        value: The density D_n
    """

    value: Fraction

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def complement(self) -> Fraction:
        """Density of sieved positions, C_n = 1 - D_n."""
        return 1 - self.value

    @property
    def mean_gap(self) -> Fraction:
        """Average distance between unsieved positions, L_n = 1 / D_n."""
        return 1 / self.value

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


class Pattern:
    """
    The sieving pattern of a prefix at a given depth.

    pattern(z) is 1 when z avoids the first `depth` classes of the prefix and
    0 when one of them sieves it out.
    """

    def __init__(self, prefix: SievingPrefix, depth: Optional[int] = None) -> None:
        """
        Initialise a pattern.

        Args:
            prefix: A validated sieving prefix
            depth: Number of active classes; defaults to the prefix length

        Raises:
            IndexOutOfRange: If depth exceeds the prefix length
        """
        depth = prefix.length if depth is None else depth
        if not 0 <= depth <= prefix.length:
            raise IndexOutOfRange(f"depth {depth} outside [0, {prefix.length}]")
        self.prefix = prefix
        self.depth = depth
        self._groups: ClassGroups = prefix.groups(depth)

    @property
    def groups(self) -> ClassGroups:
        return self._groups

    def __call__(self, z: int) -> int:
        for p, residues in self._groups:
            if z % p in residues:
                return 0
        return 1

    def __repr__(self) -> str:
        return f"Pattern(depth={self.depth}, prefix={self.prefix!r})"


def pattern_eval(pattern: Pattern, z: int) -> int:
    """
    Evaluate the pattern at z.

    Args:
        pattern: The sieving pattern
        z: Any integer

    Returns:
        1 if z is unsieved, 0 if some active class contains it
    """
    return pattern(z)


def fundamental_period(pattern: Pattern) -> int:
    """
    Return the fundamental period: the product of the distinct active primes.

    Args:
        pattern: The sieving pattern

    Returns:
        The smallest positive period (1 for the empty model)
    """
    return math.prod(p for p, _ in pattern.groups)


def average_density(pattern: Pattern) -> DensityValue:
    """
    Return the exact mean of the pattern over one fundamental period.

    A prime p carrying c active classes keeps (p - c) / p of the positions,
    independently of the other primes.

    Args:
        pattern: The sieving pattern

    Returns:
        The density as an exact fraction
    """
    density = Fraction(1)
    for p, residues in pattern.groups:
        density *= Fraction(p - len(residues), p)
    return DensityValue(density)


def materialize_period(pattern: Pattern, cap: int = DEFAULT_PERIOD_CAP) -> np.ndarray:
    """
    Materialise pattern(z) for z = 1..T as a numpy boolean vector.

    Element i holds pattern(i + 1).

    Args:
        pattern: The sieving pattern
        cap: Largest period allowed

    Returns:
        Boolean array of length T

    Raises:
        PeriodCapExceeded: If T exceeds the cap
    """
    period = fundamental_period(pattern)
    if period > cap:
        raise PeriodCapExceeded(period, cap)
    bits = np.ones(period, dtype=bool)
    for p, residues in pattern.groups:
        for r in residues:
            bits[(r - 1) % p:: p] = False
    return bits


def count_unsieved(pattern: Pattern, cap: int = DEFAULT_PERIOD_CAP) -> int:
    """Count unsieved positions in one fundamental period."""
    return int(np.count_nonzero(materialize_period(pattern, cap)))


def _regular_prime(params: RegularParams, offset: int) -> int:
    # p_{alpha + offset}
    return default_oracle().nth_prime(params.alpha + offset)


def regular_period(params: RegularParams, n: int) -> int:
    """
    Closed-form fundamental period of an (alpha, kappa)-regular pattern.

    Args:
        params: Regular parameters
        n: Depth

    Returns:
        p_{alpha + ceil(n / kappa) - 1}# / p_{alpha - 1}#
    """
    oracle = default_oracle()
    top = params.alpha + -(-n // params.kappa) - 1
    return oracle.primorial(top) // oracle.primorial(params.alpha - 1)


def _raw_regular_density(alpha: int, kappa: int, n: int) -> Fraction:
    oracle = default_oracle()
    full, partial = divmod(n, kappa)
    density = Fraction(1)
    for i in range(full):
        p = oracle.nth_prime(alpha + i)
        if p - kappa <= 0:
            raise DegenerateDenominator(
                f"p_{alpha + i} - kappa = {p - kappa} for kappa={kappa}"
            )
        density *= Fraction(p - kappa, p)
    if partial:
        p = oracle.nth_prime(alpha + full)
        if p - partial <= 0:
            raise DegenerateDenominator(
                f"p_{alpha + full} - {partial} = {p - partial}"
            )
        density *= Fraction(p - partial, p)
    return density


def regular_density(params: RegularParams, n: int) -> DensityValue:
    """
    Closed-form average density of an (alpha, kappa)-regular pattern.

    (1 - (n - kappa*floor(n/kappa)) / p_{alpha+floor(n/kappa)})
        * prod_{i < floor(n/kappa)} (1 - kappa / p_{alpha+i})

    Args:
        params: Regular parameters
        n: Depth (>= 0)

    Returns:
        The density as an exact fraction
    """
    return DensityValue(_raw_regular_density(params.alpha, params.kappa, n))


def regular_density_divisible(params: RegularParams, n: int) -> DensityValue:
    """
    Closed-form density when kappa divides n: prod_{i < n/kappa} (1 - kappa / p_{alpha+i}).

    Raises:
        ValueError: If kappa does not divide n
    """
    if n % params.kappa:
        raise ValueError(f"kappa={params.kappa} does not divide n={n}")
    density = Fraction(1)
    for i in range(n // params.kappa):
        density *= 1 - Fraction(params.kappa, _regular_prime(params, i))
    return DensityValue(density)


def regular_density_sequence(params: RegularParams, n_max: int) -> Iterator[DensityValue]:
    """
    Yield D_1, ..., D_{n_max} of an (alpha, kappa)-regular pattern.

    Each step multiplies the previous density by (p - c - 1) / (p - c), where
    c is the number of classes the current prime already carries.
    """
    density = Fraction(1)
    for n in range(1, n_max + 1):
        offset, used = divmod(n - 1, params.kappa)
        p = _regular_prime(params, offset)
        density *= Fraction(p - used - 1, p - used)
        yield DensityValue(density)


def eratosthenes_pattern(n: int) -> Pattern:
    """
    Return the Eratosthenes pattern of depth n: classes [0]_{p_1}, ..., [0]_{p_n}.
    """
    primes = default_oracle().first_primes(n)
    return Pattern(validate_prefix(primes, (0,) * n), n)


def eratosthenes_eval(n: int, z: int) -> int:
    """
    Evaluate the Eratosthenes pattern of depth n at z.

    Args:
        n: Number of leading primes used (>= 1)
        z: Any integer

    Returns:
        1 iff none of p_1..p_n divides z
    """
    for p in default_oracle().first_primes(n):
        if z % p == 0:
            return 0
    return 1


@dataclass(frozen=True)
class EratosthenesWindow:
    """
    The window [2, p_{n+1}^2 - 1] on which the depth-n Eratosthenes pattern
    only leaves primes unsieved.
    """

    n: int
    lo: int
    hi: int

    def __contains__(self, z: int) -> bool:
        return self.lo <= z <= self.hi

    def survivors(self) -> List[int]:
        """Return the unsieved positions of the window, ascending."""
        pattern = eratosthenes_pattern(self.n)
        return [z for z in range(self.lo, self.hi + 1) if pattern(z)]

    def bounds(self) -> Tuple[int, int]:
        return self.lo, self.hi


def eratosthenes_window(n: int) -> EratosthenesWindow:
    """
    Return the primality window of the depth-n Eratosthenes pattern.

    Args:
        n: Depth (>= 1)

    Returns:
        EratosthenesWindow(n, 2, p_{n+1}^2 - 1)
    """
    if n < 1:
        raise IndexOutOfRange(f"Eratosthenes depth must be >= 1, got {n}")
    p_next = default_oracle().nth_prime(n + 1)
    return EratosthenesWindow(n=n, lo=2, hi=p_next * p_next - 1)
