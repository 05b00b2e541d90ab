"""
Integer interval module for the sieve laboratory.
"""
from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True)
class IntegerInterval:
    """
    The integer interval [lo, hi], or the empty interval.

    The empty interval is stored as lo = hi = None; use IntegerInterval.empty().
    """

    lo: Optional[int] = None
    hi: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.lo is None) != (self.hi is None):
            raise ValueError("both bounds must be given, or neither")
        if self.lo is not None and self.lo > self.hi:
            raise ValueError(f"lo={self.lo} exceeds hi={self.hi}; use empty()")

    @classmethod
    def empty(cls) -> "IntegerInterval":
        return cls()

    @classmethod
    def spanning(cls, lo: int, hi: int) -> "IntegerInterval":
        """Return [lo, hi], or the empty interval when hi < lo."""
        return cls(lo, hi) if lo <= hi else cls()

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    @property
    def size(self) -> int:
        return 0 if self.is_empty else self.hi - self.lo + 1

    def __len__(self) -> int:
        return self.size

    def __contains__(self, z: int) -> bool:
        return not self.is_empty and self.lo <= z <= self.hi

    def __iter__(self) -> Iterator[int]:
        if self.is_empty:
            return iter(())
        return iter(range(self.lo, self.hi + 1))

    def issubset(self, other: "IntegerInterval") -> bool:
        """Check inclusion; the empty interval is a subset of everything."""
        if self.is_empty:
            return True
        return not other.is_empty and other.lo <= self.lo and self.hi <= other.hi

    def __str__(self) -> str:
        return "empty" if self.is_empty else f"[{self.lo}, {self.hi}]"


# a total sieve S_n(z) is an interval of sieved positions
SieveInterval = IntegerInterval
