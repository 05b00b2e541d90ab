"""
Errors module for the sieve laboratory.

Every failure the package signals on purpose is a subclass of SieveLabError,
so callers (and the command line) can tell a rejected input apart from a bug.
"""
from typing import List, Optional


class SieveLabError(ValueError):
    """Base class for all errors raised by sieve_lab."""


class PrefixError(SieveLabError):
    """
    A sieving prefix violates one of its construction constraints.

    Attributes:
        index: 0-based position of the offending class
        constraint: Short name of the violated constraint
    """

    constraint = "prefix"

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        super().__init__(message)
        self.index = index


class PrefixLengthMismatch(PrefixError):
    constraint = "equal-length"


class NonPrimeModulus(PrefixError):
    constraint = "prime-modulus"


class NotNonDecreasing(PrefixError):
    constraint = "non-decreasing"


class ResidueOutOfRange(PrefixError):
    constraint = "residue-range"


class TooManyClassesForPrime(PrefixError):
    constraint = "class-count"


class DuplicateClass(PrefixError):
    constraint = "distinct-classes"


class InvalidResidueClass(SieveLabError):
    """A residue class with a non-prime modulus or an unreduced residue."""


class InvalidRegularParams(SieveLabError):
    """Regular parameters outside alpha >= 1, 1 <= kappa < p_alpha."""


class IndexOutOfRange(SieveLabError):
    """A depth or position outside its valid range was requested."""


class DegenerateDenominator(SieveLabError):
    """A bound factor has a non-positive denominator."""


class InvalidTuple(SieveLabError):
    """Tuple offsets are empty or not strictly increasing."""


class AdmissibilityError(SieveLabError):
    """The tuple covers every residue class modulo some prime."""


class InvalidAnchor(SieveLabError):
    """The requested d does not satisfy p_d > diameter and k < p_d."""


class NoMatchingPosition(SieveLabError):
    """No position below the primorial matches the tuple."""


class InvalidExplicitM(SieveLabError):
    """An explicitly requested anchor position is out of range or unmatched."""


class NotInResidueClass(SieveLabError):
    """A position outside the anchor progression was passed to mu_inverse."""


class ConfigError(SieveLabError):
    """Run configuration is missing a value or holds an invalid one."""


class CapExceeded(SieveLabError):
    """Base class for configurable work caps."""


class ScanCapExceeded(CapExceeded):
    """
    An expansion step scanned more positions than allowed.

    Attributes:
        n: The expansion step that was aborted
        scanned: Positions scanned in that step before the abort
    """

    def __init__(self, n: int, scanned: int, cap: int) -> None:
        super().__init__(
            f"scan cap of {cap} positions exceeded at step n={n} "
            f"({scanned} positions scanned)"
        )
        self.n = n
        self.scanned = scanned
        self.cap = cap


class PeriodCapExceeded(CapExceeded):
    """A fundamental period is too long to materialise."""

    def __init__(self, period: int, cap: int) -> None:
        super().__init__(f"period {period} exceeds materialisation cap {cap}")
        self.period = period
        self.cap = cap


class MismatchReport(SieveLabError):
    """
    A reproduction scenario produced values that differ from the expected ones.

    Attributes:
        failures: Names of the failed checks, in execution order
    """

    def __init__(self, scenario: str, failures: List[str]) -> None:
        super().__init__(f"{scenario}: {len(failures)} check(s) failed: {', '.join(failures)}")
        self.scenario = scenario
        self.failures = list(failures)
