"""
Test script to verify imports are working correctly.
"""
from sieve_lab.residues import validate_prefix
from sieve_lab.patterns import Pattern, average_density, fundamental_period
from sieve_lab.total_sieve import expand_total_sieve, total_sieve_around
from sieve_lab.tuples import KTuple, choose_anchor, reduce_to_regular
from sieve_lab.utils.logger import ExperimentLogger
from sieve_lab.utils.console import print_border


def test_imports():
    """Test that all imports are working correctly."""
    print_border()
    print("Testing imports...")
    print_border()

    # Build the worked-example prefix
    prefix = validate_prefix((3, 3, 5, 5, 7, 7, 11, 11), (1, 2, 4, 0, 5, 6, 7, 10))
    print(f"Created prefix: {prefix!r}")

    pattern = Pattern(prefix)
    print(f"Period: {fundamental_period(pattern)}, density: {average_density(pattern)}")

    interval = total_sieve_around(pattern, 7)
    print(f"Total sieve around 7: {interval}")
    assert str(interval) == "[4, 35]"

    logger = ExperimentLogger(log_to_console=False)
    series = expand_total_sieve(prefix, 7, prefix.length, logger=logger)
    print(f"Expanding sizes: {series.sizes}")
    assert series.sizes[-1] == 32

    anchor = choose_anchor(KTuple((0, 2, 6)), m=17)
    print(f"Reduced classes: {reduce_to_regular(anchor, 2)}")

    print_border()
    print("All imports are working correctly!")
    print_border()


if __name__ == "__main__":
    test_imports()
