"""
Shared fixtures for the sieve laboratory tests.
"""
import pytest
from hypothesis import assume
from hypothesis import strategies as st

from sieve_lab.constants import FIGURE1_PRIMES, FIGURE1_RESIDUES
from sieve_lab.residues import SievingPrefix, validate_prefix
from sieve_lab.tuples import KTuple, TupleAnchor, choose_anchor, is_admissible
from sieve_lab.utils.logger import ExperimentLogger

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run the long growth experiments")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running experiment")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def figure1_prefix() -> SievingPrefix:
    return validate_prefix(FIGURE1_PRIMES, FIGURE1_RESIDUES)


@pytest.fixture
def guiding_anchor() -> TupleAnchor:
    return choose_anchor(KTuple((0, 2, 6)), m=17)


@pytest.fixture
def quiet_logger() -> ExperimentLogger:
    return ExperimentLogger(log_to_console=False)


@st.composite
def prefixes(draw, max_length: int = 8, primes=SMALL_PRIMES) -> SievingPrefix:
    """Random valid prefixes over small primes."""
    chosen = sorted(draw(st.lists(st.sampled_from(primes), min_size=1, max_size=max_length)))
    residues = []
    used = {}
    kept = []
    for p in chosen:
        taken = used.setdefault(p, set())
        if len(taken) + 1 >= p:
            continue
        free = [r for r in range(p) if r not in taken]
        r = draw(st.sampled_from(free))
        taken.add(r)
        kept.append(p)
        residues.append(r)
    return validate_prefix(kept, residues)


@st.composite
def admissible_tuples(draw, max_k: int = 4, max_diameter: int = 12) -> KTuple:
    """Random admissible tuples starting at 0."""
    k = draw(st.integers(1, max_k))
    rest = draw(st.lists(st.integers(1, max_diameter), min_size=k - 1, max_size=k - 1, unique=True))
    ktuple = KTuple(tuple(sorted([0] + rest)))
    assume(is_admissible(ktuple))
    return ktuple
