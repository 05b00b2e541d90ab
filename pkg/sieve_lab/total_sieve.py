"""
Total sieve module for the sieve laboratory.

This module contains the total sieve S_n(z) (the largest interval of sieved
positions around z), the expanding total sieve computed step by step, the
growth bounds gamma_n and beta*_n of (alpha, kappa)-regular patterns, and
the crossing statistics used to track how sieve sizes oscillate around them.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from sieve_lab.constants import BOUND_GAMMA, CROSSING_BOUNDS, DEFAULT_SCAN_CAP
from sieve_lab.errors import DegenerateDenominator, IndexOutOfRange, ScanCapExceeded
from sieve_lab.intervals import SieveInterval
from sieve_lab.patterns import Pattern, regular_density_sequence
from sieve_lab.primes import default_oracle
from sieve_lab.residues import RegularParams, SievingPrefix
from sieve_lab.utils.logger import ExperimentLogger


@dataclass(frozen=True)
class ExperimentRecord:
    """
    One row of a growth run.

    Attributes:
        n: Expansion step (depth)
        size: #S_n(z), 0 when the sieve is empty
        beta_star: beta*_n, or None when the prefix is not regular
        gamma: gamma_n, or None when the prefix is not regular
        crossed: Whether size - gamma changed sign at this step
    """

    n: int
    size: int
    beta_star: Optional[Fraction] = None
    gamma: Optional[Fraction] = None
    crossed: bool = False


@dataclass
class GrowthSeries:
    """
    An expanding total sieve around a fixed centre z.

    rows[i] and intervals[i] describe step n = i + 1.
    """

    z: int
    params: Optional[RegularParams] = None
    rows: List[ExperimentRecord] = field(default_factory=list)
    intervals: List[SieveInterval] = field(default_factory=list)

    def append(self, record: ExperimentRecord, interval: SieveInterval) -> None:
        self.rows.append(record)
        self.intervals.append(interval)

    @property
    def sizes(self) -> List[int]:
        return [row.size for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CrossingStats:
    """
    Sign changes of size_n - bound_n along a growth series.

    Attributes:
        crossings: Number of recorded sign changes
        last_crossing_n: Step of the last crossing, 0 when there was none
        sign_profile: sign(size_n - bound_n) for every row (-1, 0 or 1)
    """

    crossings: int
    last_crossing_n: int
    sign_profile: Tuple[int, ...]


class CrossingTracker:
    """
    Incremental crossing detector.

    A crossing is recorded at n when sign(size_n - bound_n) is non-zero and
    differs from the last non-zero sign seen. Zero carries no sign, and the
    first non-zero sign is not a crossing.
    """

    def __init__(self) -> None:
        self.crossings = 0
        self.last_crossing_n = 0
        self._last_sign = 0

    def update(self, n: int, size: int, bound: Fraction) -> Tuple[int, bool]:
        """
        Feed one row.

        Returns:
            The sign of size - bound and whether this row is a crossing
        """
        diff = size - bound
        sign = (diff > 0) - (diff < 0)
        crossed = False
        if sign != 0:
            if self._last_sign != 0 and sign != self._last_sign:
                self.crossings += 1
                self.last_crossing_n = n
                crossed = True
            self._last_sign = sign
        return sign, crossed


def count_crossings(sizes: Sequence[int], bounds: Sequence[Fraction]) -> CrossingStats:
    """
    Count sign changes of sizes[i] - bounds[i]; row i is step n = i + 1.
    """
    tracker = CrossingTracker()
    profile = [tracker.update(n, size, bound)[0]
               for n, (size, bound) in enumerate(zip(sizes, bounds), start=1)]
    return CrossingStats(tracker.crossings, tracker.last_crossing_n, tuple(profile))


def crossing_stats(series: GrowthSeries, bound: str = BOUND_GAMMA) -> CrossingStats:
    """
    Crossing statistics of a growth series against gamma_n or beta*_n.

    Args:
        series: A non-empty growth series of a regular prefix
        bound: "gamma" or "beta_star"

    Returns:
        CrossingStats for the chosen bound
    """
    if bound not in CROSSING_BOUNDS:
        raise ValueError(f"bound must be one of {CROSSING_BOUNDS}, got {bound!r}")
    if not series.rows:
        raise ValueError("crossing statistics need a non-empty series")
    values = [row.gamma if bound == BOUND_GAMMA else row.beta_star for row in series.rows]
    if any(value is None for value in values):
        raise ValueError("series carries no bounds (prefix is not regular)")
    return count_crossings(series.sizes, values)


def _raw_gamma(alpha: int, kappa: int, n: int) -> Fraction:
    oracle = default_oracle()
    q = n // kappa
    p = oracle.nth_prime(alpha + q)
    head_denominator = p - n + kappa * q
    if head_denominator <= 0:
        raise DegenerateDenominator(
            f"p_{alpha + q} - n + kappa*floor(n/kappa) = {head_denominator}"
        )
    gamma = Fraction(2 * n * p, head_denominator)
    for i in range(q):
        p_i = oracle.nth_prime(alpha + i)
        if p_i - kappa <= 0:
            raise DegenerateDenominator(f"p_{alpha + i} - kappa = {p_i - kappa}")
        gamma *= Fraction(p_i, p_i - kappa)
    return gamma


def gamma_bound(params: RegularParams, n: int) -> Fraction:
    """
    Return gamma_n, the upper growth bound of a regular expanding total sieve.

    gamma_n = 2 n p_{a+q} / (p_{a+q} - n + kappa q) * prod_{i<q} p_{a+i} / (p_{a+i} - kappa),
    with a = alpha and q = floor(n / kappa). It equals 2n / D_n.

    Args:
        params: Regular parameters
        n: Step (>= 0)

    Returns:
        gamma_n as an exact fraction

    Raises:
        DegenerateDenominator: If a factor denominator is not positive
    """
    return _raw_gamma(params.alpha, params.kappa, n)


def beta_star(params: RegularParams, n: int) -> Fraction:
    """
    Return beta*_n = 2 * sum_{i=1..n} 1 / D_i.

    Args:
        params: Regular parameters
        n: Step (>= 0)

    Returns:
        beta*_n as an exact fraction
    """
    total = Fraction(0)
    for density in regular_density_sequence(params, n):
        total += 2 * density.mean_gap
    return total


def bound_sequence(params: RegularParams, n_max: int) -> Iterator[Tuple[Fraction, Fraction]]:
    """
    Yield (beta*_n, gamma_n) for n = 1..n_max, one rational product per step.
    """
    beta = Fraction(0)
    for n, density in enumerate(regular_density_sequence(params, n_max), start=1):
        gap = density.mean_gap
        beta += 2 * gap
        yield beta, 2 * n * gap


class _GrowingPattern:
    # the pattern at the current depth, with classes appended in place
    def __init__(self) -> None:
        self._groups: List[Tuple[int, Set[int]]] = []
        self._by_prime: Dict[int, Set[int]] = {}

    def add(self, p: int, r: int) -> None:
        if p not in self._by_prime:
            self._by_prime[p] = set()
            self._groups.append((p, self._by_prime[p]))
        self._by_prime[p].add(r)

    def __call__(self, z: int) -> int:
        for p, residues in self._groups:
            if z % p in residues:
                return 0
        return 1


def _scan(pattern: Callable[[int], int], start: int, step: int, n: int,
          scan_cap: int, scanned: int) -> Tuple[int, int]:
    # walk from `start` while positions stay sieved; return the last sieved one
    position = start
    while not pattern(position + step):
        position += step
        scanned += 1
        if scanned > scan_cap:
            raise ScanCapExceeded(n, scanned, scan_cap)
    return position, scanned + 1


def total_sieve_around(pattern: Pattern, z: int, scan_cap: int = DEFAULT_SCAN_CAP) -> SieveInterval:
    """
    Return S_n(z): the largest interval of sieved positions containing z.

    Args:
        pattern: The sieving pattern
        z: Centre position
        scan_cap: Largest number of positions to evaluate

    Returns:
        The interval, or the empty interval when z itself is unsieved

    Raises:
        ScanCapExceeded: If the interval is longer than the cap allows
    """
    if pattern(z):
        return SieveInterval.empty()
    lo, scanned = _scan(pattern, z, -1, pattern.depth, scan_cap, 1)
    hi, _ = _scan(pattern, z, 1, pattern.depth, scan_cap, scanned)
    return SieveInterval(lo, hi)


def iter_expansion(
    prefix: SievingPrefix,
    z: int,
    n_max: int,
    params: Optional[RegularParams] = None,
    scan_cap: int = DEFAULT_SCAN_CAP,
) -> Iterator[Tuple[ExperimentRecord, SieveInterval]]:
    """
    Yield the expanding total sieve around z for n = 1..n_max.

    Step n only looks outward from the boundaries of step n - 1: the interior
    stays sieved because the models are nested, and the two positions just
    outside were unsieved at n - 1, so only the new class can sieve them.

    Args:
        prefix: A validated prefix with at least n_max classes
        z: Centre position
        n_max: Last step
        params: Regular parameters used for beta*_n and gamma_n (optional)
        scan_cap: Positions allowed per step

    Yields:
        (ExperimentRecord, SieveInterval) per step

    Raises:
        IndexOutOfRange: If n_max exceeds the prefix length
        ScanCapExceeded: If one step scans more than scan_cap positions
    """
    if not 0 <= n_max <= prefix.length:
        raise IndexOutOfRange(f"n_max={n_max} outside [0, {prefix.length}]")
    pattern = _GrowingPattern()
    bounds = bound_sequence(params, n_max) if params is not None else None
    tracker = CrossingTracker()
    lo: Optional[int] = None
    hi: Optional[int] = None
    for n in range(1, n_max + 1):
        p, r = prefix.primes[n - 1], prefix.residues[n - 1]
        pattern.add(p, r)
        if lo is None:
            if z % p == r:
                lo, scanned = _scan(pattern, z, -1, n, scan_cap, 1)
                hi, _ = _scan(pattern, z, 1, n, scan_cap, scanned)
        else:
            scanned = 0
            if (lo - 1) % p == r:
                lo, scanned = _scan(pattern, lo - 1, -1, n, scan_cap, 1)
            if (hi + 1) % p == r:
                hi, _ = _scan(pattern, hi + 1, 1, n, scan_cap, scanned + 1)
        interval = SieveInterval.empty() if lo is None else SieveInterval(lo, hi)
        beta = gamma = None
        crossed = False
        if bounds is not None:
            beta, gamma = next(bounds)
            _, crossed = tracker.update(n, interval.size, gamma)
        yield ExperimentRecord(n, interval.size, beta, gamma, crossed), interval


def expand_total_sieve(
    prefix: SievingPrefix,
    z: int,
    n_max: int,
    params: Optional[RegularParams] = None,
    scan_cap: int = DEFAULT_SCAN_CAP,
    sink: Optional[Callable[[ExperimentRecord], None]] = None,
    logger: Optional[ExperimentLogger] = None,
) -> GrowthSeries:
    """
    Compute the expanding total sieve around z up to step n_max.

    Args:
        prefix: A validated prefix with at least n_max classes
        z: Centre position
        n_max: Last step
        params: Regular parameters for the bounds; detected from the prefix
            when omitted
        scan_cap: Positions allowed per step
        sink: Called with every row as soon as it is computed
        logger: ExperimentLogger instance for step logging

    Returns:
        The growth series
    """
    if params is None:
        params = prefix.regular_params()
    series = GrowthSeries(z=z, params=params)
    for record, interval in iter_expansion(prefix, z, n_max, params, scan_cap):
        series.append(record, interval)
        if sink is not None:
            sink(record)
        if logger is not None:
            logger.log_step(record.n, record.size, str(interval))
    return series
