"""
Sieve laboratory package initialization.

This module initializes the sieve_lab package and exports its public surface.
"""

from .constants import VERSION
from .errors import SieveLabError
from .residues import (
    RegularParams,
    ResidueClass,
    SievingPrefix,
    model_contains,
    random_regular_prefix,
    regular_prefix,
    validate_prefix,
)
from .intervals import IntegerInterval, SieveInterval
from .primes import PrimeOracle, is_prime, nth_prime, primes_oracle, primorial
from .patterns import (
    DensityValue,
    Pattern,
    average_density,
    eratosthenes_pattern,
    eratosthenes_window,
    fundamental_period,
    materialize_period,
    pattern_eval,
    regular_density,
    regular_period,
)
from .total_sieve import (
    CrossingStats,
    ExperimentRecord,
    GrowthSeries,
    beta_star,
    crossing_stats,
    expand_total_sieve,
    gamma_bound,
    total_sieve_around,
)
from .tuples import (
    KTuple,
    ReducedClasses,
    TupleAnchor,
    choose_anchor,
    is_admissible,
    matches_at,
    matching_positions,
    mu_inverse,
    mu_map,
    reduce_to_regular,
    survivors,
    tuple_primorial_eval,
    window_growth,
    z_window,
)
from .utils.logger import ExperimentLogger

__version__ = VERSION

__all__ = [
    'CrossingStats',
    'DensityValue',
    'ExperimentLogger',
    'ExperimentRecord',
    'GrowthSeries',
    'IntegerInterval',
    'KTuple',
    'Pattern',
    'PrimeOracle',
    'ReducedClasses',
    'RegularParams',
    'ResidueClass',
    'SieveInterval',
    'SieveLabError',
    'SievingPrefix',
    'TupleAnchor',
    'average_density',
    'beta_star',
    'choose_anchor',
    'crossing_stats',
    'eratosthenes_pattern',
    'eratosthenes_window',
    'expand_total_sieve',
    'fundamental_period',
    'gamma_bound',
    'is_admissible',
    'is_prime',
    'matches_at',
    'matching_positions',
    'materialize_period',
    'model_contains',
    'mu_inverse',
    'mu_map',
    'nth_prime',
    'pattern_eval',
    'primes_oracle',
    'primorial',
    'random_regular_prefix',
    'reduce_to_regular',
    'regular_density',
    'regular_period',
    'regular_prefix',
    'survivors',
    'total_sieve_around',
    'tuple_primorial_eval',
    'validate_prefix',
    'window_growth',
    'z_window',
]
