"""
Modular arithmetic helpers: extended gcd and modular inverses.
"""
from typing import Tuple


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Return (x, y, g) with a*x + b*y = g = gcd(a, b).

    Args:
        a: First integer
        b: Second integer

    Returns:
        Bezout coefficients and the gcd
    """
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a % b
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    return prev_x, prev_y, a


def mod_inverse(a: int, modulus: int) -> int:
    """
    Return the inverse of a modulo `modulus`, in [0, modulus).

    Raises:
        ValueError: If a and modulus are not coprime
    """
    x, _, g = extended_gcd(a % modulus, modulus)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {modulus} (gcd {g})")
    return x % modulus
