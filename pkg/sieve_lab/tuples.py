"""
Tuples module for the sieve laboratory.

This module contains k-tuples of offsets, their admissibility and matching
against sieving patterns, the tuple-primorial sieving pattern anchored at
(d, m), its exact reduction to an (alpha, kappa)-regular pattern with
alpha = d and kappa = k, the mu-map between pattern coordinates and integer
positions, and the windows whose survivors are all-prime instances.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sieve_lab.errors import (
    AdmissibilityError,
    IndexOutOfRange,
    InvalidAnchor,
    InvalidExplicitM,
    InvalidTuple,
    NoMatchingPosition,
    NotInResidueClass,
)
from sieve_lab.intervals import IntegerInterval
from sieve_lab.patterns import Pattern, eratosthenes_eval
from sieve_lab.primes import default_oracle
from sieve_lab.residues import RegularParams, ResidueClass, SievingPrefix, validate_prefix
from sieve_lab.total_sieve import gamma_bound
from sieve_lab.utils.modular import mod_inverse
from sieve_lab.utils.workers import ordered_map, split_range, worker_count


@dataclass(frozen=True)
class KTuple:
    """
    A k-tuple of strictly increasing integer offsets (a_1, ..., a_k).
    """

    offsets: Tuple[int, ...]

    def __post_init__(self) -> None:
        offsets = tuple(int(a) for a in self.offsets)
        if not offsets:
            raise InvalidTuple("a tuple needs at least one offset")
        for left, right in zip(offsets, offsets[1:]):
            if right <= left:
                raise InvalidTuple(f"offsets must be strictly increasing: {offsets}")
        object.__setattr__(self, "offsets", offsets)

    @classmethod
    def parse(cls, text: Union[str, Sequence[int]]) -> "KTuple":
        """
        Build a tuple from "0,2,6" or from a sequence of integers.

        Raises:
            InvalidTuple: If the text is not a comma-separated integer list
        """
        if not isinstance(text, str):
            return cls(tuple(text))
        try:
            offsets = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError:
            raise InvalidTuple(f"cannot parse tuple {text!r}") from None
        return cls(offsets)

    @property
    def k(self) -> int:
        return len(self.offsets)

    @property
    def diameter(self) -> int:
        return self.offsets[-1] - self.offsets[0]

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.offsets) + ")"


def is_admissible(ktuple: KTuple) -> bool:
    """
    Check that the offsets miss at least one residue class modulo every prime.

    Only primes p <= k need checking: k offsets cannot cover p > k classes.

    Args:
        ktuple: The tuple

    Returns:
        True iff the tuple is admissible
    """
    for p in default_oracle().primes_up_to(ktuple.k):
        if len({a % p for a in ktuple.offsets}) == p:
            return False
    return True


def matches_at(ktuple: KTuple, pattern: Pattern, m: int) -> bool:
    """Check whether pattern(m + a_i) = 1 for every offset."""
    return all(pattern(m + a) for a in ktuple.offsets)


def _match_shard(task: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], int, int, int]) -> List[int]:
    offsets, primes, residues, depth, lo, hi = task
    pattern = Pattern(SievingPrefix(primes, residues), depth)
    return [m for m in range(lo, hi + 1) if all(pattern(m + a) for a in offsets)]


def matching_positions(
    ktuple: KTuple,
    pattern: Pattern,
    window: IntegerInterval,
    workers: Optional[int] = None,
) -> List[int]:
    """
    Return every m in the window at which the tuple matches the pattern.

    Args:
        ktuple: The tuple
        pattern: The sieving pattern
        window: Finite integer interval of candidate positions
        workers: Process count; defaults to the SIEVE_LAB_WORKERS setting

    Returns:
        Matching positions, ascending
    """
    if window.is_empty:
        return []
    workers = worker_count() if workers is None else workers
    prefix = pattern.prefix
    tasks = [
        (ktuple.offsets, prefix.primes, prefix.residues, pattern.depth, lo, hi)
        for lo, hi in split_range(window.lo, window.hi, workers)
    ]
    return [m for shard in ordered_map(_match_shard, tasks, workers) for m in shard]


@dataclass(frozen=True)
class TupleAnchor:
    """
    The anchor (d, m) of a tuple-primorial sieving pattern.

    Attributes:
        ktuple: The admissible tuple
        d: Index with p_d > diameter and k < p_d, d >= 2
        m: Position in [1, p_{d-1}# - 1] where the tuple matches P_{d-1}
    """

    ktuple: KTuple
    d: int
    m: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise InvalidAnchor(f"d must be >= 2, got {self.d}")
        p_d = self.p_d
        if p_d <= self.ktuple.diameter:
            raise InvalidAnchor(f"p_{self.d}={p_d} does not exceed diameter {self.ktuple.diameter}")
        if self.ktuple.k >= p_d:
            raise InvalidAnchor(f"k={self.ktuple.k} must be below p_{self.d}={p_d}")
        if not 0 < self.m < self.primorial:
            raise InvalidExplicitM(f"m={self.m} not in [1, {self.primorial - 1}]")
        if not all(eratosthenes_eval(self.d - 1, self.m + a) for a in self.ktuple.offsets):
            raise InvalidExplicitM(
                f"{self.ktuple} does not match the depth-{self.d - 1} Eratosthenes pattern at m={self.m}"
            )

    @property
    def p_d(self) -> int:
        return default_oracle().nth_prime(self.d)

    @property
    def primorial(self) -> int:
        """p_{d-1}#, the step of the mu-map."""
        return default_oracle().primorial(self.d - 1)

    def regular_params(self) -> RegularParams:
        return RegularParams(alpha=self.d, kappa=self.ktuple.k)


def smallest_anchor_index(ktuple: KTuple) -> int:
    """Return the smallest d >= 2 with p_d > diameter."""
    oracle = default_oracle()
    d = 2
    while oracle.nth_prime(d) <= ktuple.diameter:
        d += 1
    return d


def choose_anchor(ktuple: KTuple, m: Optional[int] = None, d: Optional[int] = None) -> TupleAnchor:
    """
    Pick the anchor of the tuple-primorial pattern.

    Args:
        ktuple: An admissible tuple
        m: Explicit position; the smallest match in [1, p_{d-1}# - 1] when omitted
        d: Explicit index; the smallest valid one when omitted

    Returns:
        The validated anchor

    Raises:
        AdmissibilityError: If the tuple is not admissible
        InvalidAnchor: If an explicit d is too small for the tuple
        InvalidExplicitM: If an explicit m is out of range or does not match
        NoMatchingPosition: If no m exists for the chosen d
    """
    if not is_admissible(ktuple):
        raise AdmissibilityError(f"{ktuple} covers every residue class modulo some prime")
    d = smallest_anchor_index(ktuple) if d is None else d
    if m is not None:
        return TupleAnchor(ktuple, d, m)
    if d < 2:
        raise InvalidAnchor(f"d must be >= 2, got {d}")
    oracle = default_oracle()
    period = oracle.primorial(d - 1)
    for candidate in range(1, period):
        if all(eratosthenes_eval(d - 1, candidate + a) for a in ktuple.offsets):
            return TupleAnchor(ktuple, d, candidate)
    raise NoMatchingPosition(f"{ktuple} matches nowhere in [1, {period - 1}] at depth {d - 1}")


def tuple_primorial_eval(anchor: TupleAnchor, g: int, z: int) -> int:
    """
    Evaluate the tuple-primorial sieving pattern.

    Args:
        anchor: The anchor (d, m)
        g: Number of primes p_d..p_{d+g-1} that sieve
        z: Pattern coordinate

    Returns:
        0 if some m + a_u + (z - 1) p_{d-1}# is divisible by some p_v, else 1
    """
    oracle = default_oracle()
    base = anchor.m + (z - 1) * anchor.primorial
    for v in range(anchor.d, anchor.d + g):
        p_v = oracle.nth_prime(v)
        for a in anchor.ktuple.offsets:
            if (base + a) % p_v == 0:
                return 0
    return 1


@dataclass(frozen=True)
class ReducedClasses:
    """
    Residue classes of the regular pattern equal to a tuple-primorial pattern.

    classes hold r_{u,v} grouped k per prime p_v, v = d..d+g-1, u = 1..k.
    """

    alpha: int
    kappa: int
    g: int
    classes: Tuple[ResidueClass, ...]

    def to_prefix(self) -> SievingPrefix:
        """Validate the classes as a sieving prefix."""
        return validate_prefix(
            [c.modulus for c in self.classes], [c.residue for c in self.classes]
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "kappa": self.kappa,
            "classes": [{"r": c.residue, "p": c.modulus} for c in self.classes],
        }

    def __str__(self) -> str:
        return " u ".join(str(c) for c in self.classes)


def reduce_to_regular(anchor: TupleAnchor, g: int) -> ReducedClasses:
    """
    Rewrite the tuple-primorial pattern as classes of a regular pattern.

    r_{u,v} = (1 - (m + a_u) * inv(p_{d-1}# mod p_v)) mod p_v.

    Args:
        anchor: The anchor (d, m)
        g: Number of sieving primes

    Returns:
        ReducedClasses with alpha = d, kappa = k

    Raises:
        IndexOutOfRange: If g < 1
    """
    if g < 1:
        raise IndexOutOfRange(f"g must be >= 1, got {g}")
    oracle = default_oracle()
    step = anchor.primorial
    classes = []
    for v in range(anchor.d, anchor.d + g):
        p_v = oracle.nth_prime(v)
        inverse = mod_inverse(step % p_v, p_v)
        for a in anchor.ktuple.offsets:
            classes.append(ResidueClass((1 - (anchor.m + a) * inverse) % p_v, p_v))
    return ReducedClasses(alpha=anchor.d, kappa=anchor.ktuple.k, g=g, classes=tuple(classes))


def mu_map(anchor: TupleAnchor, z: int) -> int:
    """Return mu(z) = m + (z - 1) p_{d-1}#."""
    return anchor.m + (z - 1) * anchor.primorial


def mu_inverse(anchor: TupleAnchor, position: int) -> int:
    """
    Return the z with mu(z) = position.

    Raises:
        NotInResidueClass: If position is not congruent to m modulo p_{d-1}#
    """
    offset, remainder = divmod(position - anchor.m, anchor.primorial)
    if remainder:
        raise NotInResidueClass(
            f"{position} is not in [{anchor.m}]_{anchor.primorial}"
        )
    return offset + 1


def z_window(anchor: TupleAnchor, n: int, z_start: int = 1) -> IntegerInterval:
    """
    Return Z_n = [z_start, floor((p_{d+n}^2 - m) / p_{d-1}#)].

    Args:
        anchor: The anchor (d, m)
        n: Depth (>= 1)
        z_start: First coordinate (>= 1)

    Returns:
        The window, empty when the upper end is below z_start

    Raises:
        IndexOutOfRange: If n or z_start is below 1
    """
    if n < 1 or z_start < 1:
        raise IndexOutOfRange(f"n and z_start must be >= 1, got n={n}, z_start={z_start}")
    p = default_oracle().nth_prime(anchor.d + n)
    return IntegerInterval.spanning(z_start, (p * p - anchor.m) // anchor.primorial)


@dataclass(frozen=True)
class SurvivorRow:
    """A tuple instance left unsieved inside the prime window."""

    z: int
    position: int
    all_prime: bool


def _survivor_shard(task: Tuple[Tuple[int, ...], int, int, int, int, int]) -> List[SurvivorRow]:
    offsets, d, m, n, lo, hi = task
    anchor = TupleAnchor(KTuple(offsets), d, m)
    oracle = default_oracle()
    p = oracle.nth_prime(d + n)
    limit = p * p - 1
    rows = []
    for z in range(lo, hi + 1):
        position = mu_map(anchor, z)
        if position + offsets[0] < 2 or position + offsets[-1] > limit:
            continue
        if tuple_primorial_eval(anchor, n, z):
            all_prime = all(oracle.is_prime(position + a) for a in offsets)
            rows.append(SurvivorRow(z, position, all_prime))
    return rows


def survivors(anchor: TupleAnchor, n: int, workers: Optional[int] = None) -> List[SurvivorRow]:
    """
    List the tuple instances that survive sieving by p_d..p_{d+n-1}.

    Only z in Z_n whose whole instance lies in [2, p_{d+n}^2 - 1] are
    reported; every element of such a survivor is prime.

    Args:
        anchor: The anchor (d, m)
        n: Depth (>= 1)
        workers: Process count; defaults to the SIEVE_LAB_WORKERS setting

    Returns:
        Survivor rows ordered by z
    """
    window = z_window(anchor, n)
    if window.is_empty:
        return []
    workers = worker_count() if workers is None else workers
    tasks = [
        (anchor.ktuple.offsets, anchor.d, anchor.m, n, lo, hi)
        for lo, hi in split_range(window.lo, window.hi, workers)
    ]
    return [row for shard in ordered_map(_survivor_shard, tasks, workers) for row in shard]


@dataclass(frozen=True)
class WindowGrowthRow:
    n: int
    window_size: int
    gamma: Fraction


def window_growth(anchor: TupleAnchor, n_max: int) -> List[WindowGrowthRow]:
    """
    Tabulate #Z_n against gamma_{kn} of the reduced regular pattern.

    Args:
        anchor: The anchor (d, m)
        n_max: Last depth

    Returns:
        One row per n = 1..n_max
    """
    params = anchor.regular_params()
    return [
        WindowGrowthRow(n, z_window(anchor, n).size, gamma_bound(params, anchor.ktuple.k * n))
        for n in range(1, n_max + 1)
    ]


def admissible_residues(ktuple: KTuple, p: int) -> List[int]:
    """Return the residues modulo p that the offsets leave uncovered."""
    covered = {a % p for a in ktuple.offsets}
    return [r for r in range(p) if r not in covered]


def instance_count_bound(ktuple: KTuple, d: int) -> int:
    """Return the number of classes modulo p_{d-1}# where the tuple matches P_{d-1}."""
    oracle = default_oracle()
    return math.prod(len(admissible_residues(ktuple, p)) for p in oracle.first_primes(d - 1))
