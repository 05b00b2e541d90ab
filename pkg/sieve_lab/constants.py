"""
Constants for the sieve laboratory.

This module contains all the constant values used throughout the package:
default caps, output formats, exit statuses and the worked examples that the
reproduction scenarios check against.
"""

# Package constants
VERSION = "1.0.0"

# Scan and materialisation caps
DEFAULT_SCAN_CAP = 10**9
DEFAULT_PERIOD_CAP = 10**8

# Prime oracle constants
ORACLE_INITIAL_LIMIT = 1024
ORACLE_SEGMENT_SIZE = 1 << 20
# Regular detection only locates first primes up to this bound
REGULAR_DETECTION_LIMIT = 10**7

# Output constants
FORMAT_CSV = "csv"
FORMAT_JSON = "json"
OUTPUT_FORMATS = (FORMAT_CSV, FORMAT_JSON)
DEFAULT_FORMAT = FORMAT_CSV
MANIFEST_SUFFIX = ".manifest.json"

PATTERN_HEADER = ("z", "bit")
GROWTH_HEADER = ("n", "size", "beta_star", "gamma", "crossed")
EXPERIMENT_HEADER = ("seed",) + GROWTH_HEADER
SURVIVOR_HEADER = ("z", "position", "all_prime")
WINDOW_GROWTH_HEADER = ("n", "window_size", "gamma")
PRIMES_HEADER = ("prime",)

# Crossing bounds
BOUND_GAMMA = "gamma"
BOUND_BETA_STAR = "beta_star"
CROSSING_BOUNDS = (BOUND_GAMMA, BOUND_BETA_STAR)

# Exit statuses
EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 1
EXIT_MISMATCH = 2
EXIT_CAP_EXCEEDED = 3

# Environment
WORKERS_ENV_VAR = "SIEVE_LAB_WORKERS"
DEFAULT_WORKERS = 1

# Worked example: an ordered sieving model over (3,3,5,5,7,7,11,11)
FIGURE1_PRIMES = (3, 3, 5, 5, 7, 7, 11, 11)
FIGURE1_RESIDUES = (1, 2, 4, 0, 5, 6, 7, 10)
FIGURE1_CENTRE = 7

# Guiding example: the admissible triplet (0,2,6)
GUIDING_TUPLE = (0, 2, 6)
GUIDING_D = 4
GUIDING_M = 17
GUIDING_G = 2
GUIDING_MATCHING_CLASSES = 2
GUIDING_MATCHES_ONE_PERIOD = (11, 17)
GUIDING_MATCHES_WIDE = (11, 17, 41, 47)
GUIDING_WIDE_WINDOW = (0, 61)
GUIDING_REDUCED_CLASSES = ((3, 7), (2, 7), (0, 7), (3, 11), (0, 11), (5, 11))
GUIDING_M2_POSITIONS = (17, 47, 77, 107, 137)
GUIDING_Z2 = (1, 5)
GUIDING_ERATOSTHENES_DEPTH = 5
GUIDING_ERATOSTHENES_WINDOW = (2, 168)

# Scenario names
SCENARIO_FIGURE1 = "figure1"
SCENARIO_GUIDING = "guiding-example"
SCENARIOS = (SCENARIO_FIGURE1, SCENARIO_GUIDING)

# UI constants
BORDER_LENGTH = 80

# Report messages
CHECK_PASS = "PASS"
CHECK_FAIL = "FAIL"
REPORT_HEADER = "Reproduction: {scenario}"
REPORT_FOOTER = "{verdict}: {passed}/{total} checks"
