"""
Residues module for the sieve laboratory.

This module contains residue classes, the validated sieving prefix that
defines an ordered sieving model, and the (alpha, kappa)-regular prime
sieving sequence.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from sieve_lab.constants import REGULAR_DETECTION_LIMIT
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
from sieve_lab.primes import default_oracle

# (prime, residues sieved modulo that prime), in order of first appearance
ClassGroups = Tuple[Tuple[int, FrozenSet[int]], ...]


@dataclass(frozen=True)
class ResidueClass:
    """The class [residue]_modulus of integers congruent to residue."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if not default_oracle().is_prime(self.modulus):
            raise InvalidResidueClass(f"modulus {self.modulus} is not prime")
        if not 0 <= self.residue < self.modulus:
            raise InvalidResidueClass(
                f"residue {self.residue} not in [0, {self.modulus})"
            )

    def contains(self, z: int) -> bool:
        """Check whether z lies in this class."""
        return z % self.modulus == self.residue

    def __str__(self) -> str:
        return f"[{self.residue}]_{self.modulus}"


@dataclass(frozen=True)
class RegularParams:
    """
    Parameters of an (alpha, kappa)-regular prime sieving sequence.

    The i-th prime of the sequence is p_{alpha + ceil(i / kappa) - 1}: every
    prime from p_alpha on is repeated kappa times.
    """

    alpha: int
    kappa: int

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.kappa < 1:
            raise InvalidRegularParams(
                f"alpha and kappa must be positive, got ({self.alpha}, {self.kappa})"
            )
        p_alpha = default_oracle().nth_prime(self.alpha)
        if self.kappa >= p_alpha:
            raise InvalidRegularParams(
                f"kappa={self.kappa} must be below p_alpha={p_alpha}"
            )


def _group_classes(primes: Sequence[int], residues: Sequence[int]) -> ClassGroups:
    grouped: Dict[int, set] = {}
    for p, r in zip(primes, residues):
        grouped.setdefault(p, set()).add(r)
    return tuple((p, frozenset(rs)) for p, rs in grouped.items())


class SievingPrefix:
    """
    A validated finite prefix of a sieving sequence (p_i, r_i), i = 1..n.

    Instances are immutable; expand them with extend(), which returns a new
    prefix. Validation happens once, at construction, so downstream code can
    trust the four constraints without re-checking.
    """

    __slots__ = ("_primes", "_residues")

    def __init__(self, primes: Tuple[int, ...], residues: Tuple[int, ...]) -> None:
        """
        Initialise a prefix from sequences that are already known to be valid.

        Use validate_prefix() for untrusted input.

        Args:
            primes: The prime sieving sequence p_1..p_n
            residues: The residue sieving sequence r_1..r_n
        """
        self._primes = tuple(primes)
        self._residues = tuple(residues)

    @property
    def primes(self) -> Tuple[int, ...]:
        return self._primes

    @property
    def residues(self) -> Tuple[int, ...]:
        return self._residues

    @property
    def length(self) -> int:
        return len(self._primes)

    def __len__(self) -> int:
        return len(self._primes)

    def classes(self, n: Optional[int] = None) -> List[ResidueClass]:
        """Return the first n residue classes (all of them by default)."""
        n = self.length if n is None else n
        return [ResidueClass(r, p) for p, r in zip(self._primes[:n], self._residues[:n])]

    def groups(self, n: Optional[int] = None) -> ClassGroups:
        """
        Return the first n classes grouped by prime.

        Args:
            n: Depth; defaults to the full length

        Returns:
            Tuple of (prime, frozenset of residues)
        """
        n = self.length if n is None else n
        return _group_classes(self._primes[:n], self._residues[:n])

    def truncate(self, n: int) -> "SievingPrefix":
        """Return the prefix of the first n classes."""
        if not 0 <= n <= self.length:
            raise IndexOutOfRange(f"depth {n} outside [0, {self.length}]")
        return SievingPrefix(self._primes[:n], self._residues[:n])

    def extend(self, prime: int, residue: int) -> "SievingPrefix":
        """
        Append one class, validating only the new element.

        Args:
            prime: The next prime p_{n+1}
            residue: The next residue r_{n+1}

        Returns:
            A new, longer prefix
        """
        return validate_prefix(self._primes + (prime,), self._residues + (residue,),
                               trusted_length=self.length)

    def regular_params(self) -> Optional[RegularParams]:
        """
        Detect whether the primes form an (alpha, kappa)-regular sequence.

        kappa is the multiplicity of the first prime; a prefix holding a
        single prime therefore reports kappa equal to that multiplicity.

        Returns:
            The matching RegularParams, or None for irregular or empty prefixes
            and for first primes beyond REGULAR_DETECTION_LIMIT
        """
        if not self._primes or self._primes[0] > REGULAR_DETECTION_LIMIT:
            return None
        oracle = default_oracle()
        alpha = oracle.prime_index(self._primes[0])
        kappa = self._primes.count(self._primes[0])
        try:
            params = RegularParams(alpha, kappa)
        except InvalidRegularParams:
            return None
        for i, p in enumerate(self._primes, start=1):
            if p != regular_prime_at(params, i):
                return None
        return params

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SievingPrefix):
            return NotImplemented
        return self._primes == other._primes and self._residues == other._residues

    def __hash__(self) -> int:
        return hash((self._primes, self._residues))

    def __repr__(self) -> str:
        return f"SievingPrefix(primes={self._primes}, residues={self._residues})"


def validate_prefix(
    primes: Sequence[int],
    residues: Sequence[int],
    trusted_length: int = 0,
) -> SievingPrefix:
    """
    Build a SievingPrefix, checking every construction constraint.

    The checks run index by index and, within an index, in the order:
    prime modulus, non-decreasing primes, residue range, class count per
    prime, distinct classes. The first violation is raised.

    Args:
        primes: Candidate prime sieving sequence
        residues: Candidate residue sieving sequence
        trusted_length: Leading elements already known to be valid

    Returns:
        The validated prefix

    Raises:
        PrefixLengthMismatch, NonPrimeModulus, NotNonDecreasing,
        ResidueOutOfRange, TooManyClassesForPrime, DuplicateClass
    """
    primes = tuple(int(p) for p in primes)
    residues = tuple(int(r) for r in residues)
    if len(primes) != len(residues):
        raise PrefixLengthMismatch(
            f"{len(primes)} primes but {len(residues)} residues"
        )
    oracle = default_oracle()
    seen: Dict[int, set] = {}
    for i, (p, r) in enumerate(zip(primes, residues)):
        if i >= trusted_length:
            if not oracle.is_prime(p):
                raise NonPrimeModulus(f"p[{i}]={p} is not prime", index=i)
            if i > 0 and p < primes[i - 1]:
                raise NotNonDecreasing(
                    f"p[{i}]={p} is below p[{i - 1}]={primes[i - 1]}", index=i
                )
            if not 0 <= r < p:
                raise ResidueOutOfRange(f"r[{i}]={r} not in [0, {p})", index=i)
            if len(seen.get(p, ())) + 1 >= p:
                raise TooManyClassesForPrime(
                    f"prime {p} would carry {len(seen[p]) + 1} classes (needs < {p})",
                    index=i,
                )
            if r in seen.get(p, ()):
                raise DuplicateClass(f"class [{r}]_{p} repeated at index {i}", index=i)
        seen.setdefault(p, set()).add(r)
    return SievingPrefix(primes, residues)


def model_contains(prefix: SievingPrefix, n: int, z: int) -> bool:
    """
    Check whether z belongs to the union of the first n classes.

    Args:
        prefix: A validated prefix
        n: Depth, 0 <= n <= prefix.length
        z: Any integer

    Returns:
        True iff z is congruent to r_i modulo p_i for some i <= n

    Raises:
        IndexOutOfRange: If n exceeds the prefix length
    """
    if not 0 <= n <= prefix.length:
        raise IndexOutOfRange(f"depth {n} outside [0, {prefix.length}]")
    return any(z % p == r for p, r in zip(prefix.primes[:n], prefix.residues[:n]))


def regular_prime_at(params: RegularParams, i: int) -> int:
    """
    Return the i-th prime of the (alpha, kappa)-regular sequence.

    Args:
        params: Regular parameters
        i: 1-based position in the sequence

    Returns:
        p_{alpha + ceil(i / kappa) - 1}
    """
    if i < 1:
        raise IndexOutOfRange(f"sequence position must be >= 1, got {i}")
    return default_oracle().nth_prime(params.alpha + -(-i // params.kappa) - 1)


def regular_primes(params: RegularParams, length: int) -> Tuple[int, ...]:
    """Return the first `length` primes of the regular sequence."""
    return tuple(regular_prime_at(params, i) for i in range(1, length + 1))


def regular_prefix(params: RegularParams, residues: Iterable[int]) -> SievingPrefix:
    """
    Pair the regular prime sequence with the given residues.

    Args:
        params: Regular parameters
        residues: r_1..r_n

    Returns:
        The validated prefix
    """
    residues = tuple(residues)
    return validate_prefix(regular_primes(params, len(residues)), residues)


def random_regular_prefix(params: RegularParams, length: int, seed: int) -> SievingPrefix:
    """
    Draw a reproducible random residue sequence for a regular prefix.

    The generator is numpy's PCG64 seeded with the 64-bit seed. Each r_i is
    drawn uniformly from the ascending list of residues not yet used for p_i.

    Args:
        params: Regular parameters
        length: Number of classes n
        seed: Non-negative seed below 2**64

    Returns:
        The validated prefix
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    primes = regular_primes(params, length)
    used: Dict[int, List[int]] = {}
    residues = []
    for p in primes:
        taken = used.setdefault(p, [])
        r = _nth_free_residue(taken, int(rng.integers(p - len(taken))))
        taken.append(r)
        taken.sort()
        residues.append(r)
    return validate_prefix(primes, residues)


def _nth_free_residue(taken: List[int], j: int) -> int:
    # j-th element (0-based) of range(p) with the sorted `taken` removed
    r = j
    for t in taken:
        if t > r:
            break
        r += 1
    return r
