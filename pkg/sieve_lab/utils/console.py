"""
Console utility functions for the sieve laboratory.
"""
from typing import Optional, Sequence, TextIO

from sieve_lab.constants import BORDER_LENGTH


def print_border(stream: Optional[TextIO] = None) -> None:
    """Print a border for visual separation."""
    print("-" * BORDER_LENGTH, file=stream)


def print_section(title: str, stream: Optional[TextIO] = None) -> None:
    """Print a titled section header."""
    print(f"\n=== {title} ===", file=stream)


def print_key_values(pairs: Sequence[tuple], stream: Optional[TextIO] = None) -> None:
    """
    Print aligned `key: value` lines.

    Args:
        pairs: Sequence of (key, value)
        stream: Destination stream
    """
    if not pairs:
        return
    width = max(len(str(key)) for key, _ in pairs)
    for key, value in pairs:
        print(f"{str(key).ljust(width)} : {value}", file=stream)
