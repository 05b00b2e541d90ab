"""
Experiments module for the sieve laboratory.

This module contains the Reproduction class that replays the worked
examples and checks every expected value, and the seeded growth experiment
that runs one expanding total sieve per seed across worker processes.
"""
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from sieve_lab.constants import (
    CHECK_FAIL,
    CHECK_PASS,
    DEFAULT_SCAN_CAP,
    FIGURE1_CENTRE,
    FIGURE1_PRIMES,
    FIGURE1_RESIDUES,
    GUIDING_D,
    GUIDING_ERATOSTHENES_DEPTH,
    GUIDING_ERATOSTHENES_WINDOW,
    GUIDING_G,
    GUIDING_M,
    GUIDING_M2_POSITIONS,
    GUIDING_MATCHING_CLASSES,
    GUIDING_MATCHES_ONE_PERIOD,
    GUIDING_MATCHES_WIDE,
    GUIDING_REDUCED_CLASSES,
    GUIDING_TUPLE,
    GUIDING_WIDE_WINDOW,
    GUIDING_Z2,
    REPORT_FOOTER,
    REPORT_HEADER,
    SCENARIO_FIGURE1,
    SCENARIO_GUIDING,
)
from sieve_lab.errors import ConfigError, MismatchReport, ScanCapExceeded
from sieve_lab.intervals import IntegerInterval
from sieve_lab.patterns import Pattern, eratosthenes_pattern, eratosthenes_window
from sieve_lab.residues import RegularParams, SievingPrefix, random_regular_prefix, validate_prefix
from sieve_lab.total_sieve import (
    CrossingStats,
    ExperimentRecord,
    count_crossings,
    expand_total_sieve,
    iter_expansion,
    total_sieve_around,
)
from sieve_lab.tuples import (
    KTuple,
    TupleAnchor,
    choose_anchor,
    instance_count_bound,
    matching_positions,
    mu_map,
    reduce_to_regular,
    z_window,
)
from sieve_lab.utils.console import print_border, print_section
from sieve_lab.utils.logger import ExperimentLogger
from sieve_lab.utils.workers import iter_ordered


def figure1_prefix() -> SievingPrefix:
    """Return the prefix (3,3,5,5,7,7,11,11) / (1,2,4,0,5,6,7,10)."""
    return validate_prefix(FIGURE1_PRIMES, FIGURE1_RESIDUES)


def guiding_anchor() -> TupleAnchor:
    """Return the anchor d=4, m=17 of the triplet (0,2,6)."""
    return choose_anchor(KTuple(GUIDING_TUPLE), m=GUIDING_M, d=GUIDING_D)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str


class Reproduction:
    """
    Replays one worked example and compares every value with the expected one.

    The scenario always runs to the end, so a report lists every mismatch
    rather than only the first.
    """

    def __init__(self, scenario: str, logger: Optional[ExperimentLogger] = None,
                 stream: Optional[TextIO] = None) -> None:
        """
        Initialise a reproduction run.

        Args:
            scenario: "figure1" or "guiding-example"
            logger: ExperimentLogger instance; a quiet one is created when omitted
            stream: Destination of the report; the current stdout when omitted

        Raises:
            ConfigError: If the scenario is unknown
        """
        runners: Dict[str, Callable[[], None]] = {
            SCENARIO_FIGURE1: self._figure1,
            SCENARIO_GUIDING: self._guiding_example,
        }
        if scenario not in runners:
            raise ConfigError(f"unknown scenario {scenario!r}")
        self.scenario = scenario
        self.logger = logger or ExperimentLogger(log_to_console=False)
        self.stream = stream
        self.results: List[CheckResult] = []
        self._runner = runners[scenario]

    def check(self, name: str, expected: Any, actual: Any) -> bool:
        """Record one comparison and log its outcome."""
        passed = expected == actual
        result = CheckResult(name, passed, str(expected), str(actual))
        self.results.append(result)
        detail = None if passed else f"expected {result.expected}, got {result.actual}"
        self.logger.log_check(name, passed, detail)
        return passed

    @property
    def failures(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]

    def run(self) -> List[CheckResult]:
        """
        Run the scenario and print the report.

        Returns:
            The check results, in execution order

        Raises:
            MismatchReport: If any check failed
        """
        self.results = []
        self._runner()
        self.print_report()
        if self.failures:
            raise MismatchReport(self.scenario, self.failures)
        return self.results

    def print_report(self) -> None:
        print_section(REPORT_HEADER.format(scenario=self.scenario), self.stream)
        for result in self.results:
            verdict = CHECK_PASS if result.passed else CHECK_FAIL
            line = f"{verdict} {result.name}: {result.actual}"
            if not result.passed:
                line += f" (expected {result.expected})"
            print(line, file=self.stream)
        print_border(self.stream)
        passed = len(self.results) - len(self.failures)
        verdict = CHECK_FAIL if self.failures else CHECK_PASS
        print(REPORT_FOOTER.format(verdict=verdict, passed=passed, total=len(self.results)),
              file=self.stream)

    def _figure1(self) -> None:
        prefix = figure1_prefix()
        self.check("S_3(23)", "[22, 26]", str(total_sieve_around(Pattern(prefix, 3), 23)))
        depth5 = Pattern(prefix, 5)
        sieves = {str(total_sieve_around(depth5, z)) for z in (9, 12, 17)}
        self.check("S_5(9) = S_5(12) = S_5(17)", {"[7, 17]"}, sieves)
        self.check("S_7(21)", "empty", str(total_sieve_around(Pattern(prefix, 7), 21)))
        self.check("S_8(7)", "[4, 35]", str(total_sieve_around(Pattern(prefix, 8), FIGURE1_CENTRE)))
        series = expand_total_sieve(prefix, FIGURE1_CENTRE, prefix.length, logger=self.logger)
        self.check("expanding total sieve around 7, final size", 32, series.rows[-1].size)

    def _guiding_example(self) -> None:
        ktuple = KTuple(GUIDING_TUPLE)
        depth3 = eratosthenes_pattern(GUIDING_D - 1)
        anchor = guiding_anchor()
        self.check("matches in one period", list(GUIDING_MATCHES_ONE_PERIOD),
                   matching_positions(ktuple, depth3, IntegerInterval(0, anchor.primorial - 1)))
        self.check("matches in [0, 61]", list(GUIDING_MATCHES_WIDE),
                   matching_positions(ktuple, depth3, IntegerInterval(*GUIDING_WIDE_WINDOW)))
        self.check("matching classes modulo 30", GUIDING_MATCHING_CLASSES,
                   instance_count_bound(ktuple, GUIDING_D))
        self.check("smallest anchor index", GUIDING_D, choose_anchor(ktuple).d)
        reduced = reduce_to_regular(anchor, GUIDING_G)
        self.check("reduced classes", list(GUIDING_REDUCED_CLASSES),
                   [(c.residue, c.modulus) for c in reduced.classes])
        window = z_window(anchor, 2)
        self.check("Z_2", IntegerInterval(*GUIDING_Z2), window)
        self.check("M_2", list(GUIDING_M2_POSITIONS), [mu_map(anchor, z) for z in window])
        erat = eratosthenes_window(GUIDING_ERATOSTHENES_DEPTH)
        self.check("Eratosthenes window n=5", GUIDING_ERATOSTHENES_WINDOW, erat.bounds())


@dataclass
class GrowthRun:
    """The growth series of one seed, with its crossing statistics against gamma_n."""

    seed: int
    rows: List[ExperimentRecord]
    crossings: CrossingStats


GrowthSink = Callable[[int, ExperimentRecord], None]

# (n, scanned, cap) of an aborted step; ScanCapExceeded itself does not pickle
CapInfo = Optional[Tuple[int, int, int]]


def _growth_task(task: Tuple[int, int, int, int, int, int]) -> Tuple[List[ExperimentRecord], CapInfo]:
    alpha, kappa, seed, z, n_max, scan_cap = task
    params = RegularParams(alpha, kappa)
    prefix = random_regular_prefix(params, n_max, seed)
    rows: List[ExperimentRecord] = []
    try:
        for record, _ in iter_expansion(prefix, z, n_max, params, scan_cap):
            rows.append(record)
    except ScanCapExceeded as e:
        return rows, (e.n, e.scanned, e.cap)
    return rows, None


def run_growth_experiment(
    params: RegularParams,
    seeds: Sequence[int],
    z: int,
    n_max: int,
    scan_cap: int = DEFAULT_SCAN_CAP,
    workers: Optional[int] = None,
    logger: Optional[ExperimentLogger] = None,
    sink: Optional[GrowthSink] = None,
) -> List[GrowthRun]:
    """
    Run one expanding total sieve per seed on a random regular prefix.

    Seeds run across worker processes; their rows reach the sink in
    (seed, n) order as soon as each seed's turn comes up.

    Args:
        params: Regular parameters shared by every run
        seeds: 64-bit seeds of the residue generator
        z: Centre position
        n_max: Last step (>= 1)
        scan_cap: Positions allowed per step
        workers: Process count; defaults to the SIEVE_LAB_WORKERS setting
        logger: ExperimentLogger instance for run summaries
        sink: Called with (seed, record) for every completed row

    Returns:
        One GrowthRun per seed, in the order of `seeds`

    Raises:
        ScanCapExceeded: After the completed rows of the aborted seed (and of
            every seed before it) have reached the sink
    """
    tasks = [(params.alpha, params.kappa, seed, z, n_max, scan_cap) for seed in seeds]
    runs = []
    for seed, (rows, cap_info) in zip(seeds, iter_ordered(_growth_task, tasks, workers)):
        if sink is not None:
            for record in rows:
                sink(seed, record)
        if cap_info is not None:
            raise ScanCapExceeded(*cap_info)
        stats = crossing_stats_for_rows(rows)
        runs.append(GrowthRun(seed, rows, stats))
        if logger is not None:
            logger.log_event(
                "RUN",
                f"seed={seed} final_size={rows[-1].size if rows else 0} crossings={stats.crossings}",
                seed=seed, crossings=stats.crossings,
            )
    return runs


def crossing_stats_for_rows(rows: Sequence[ExperimentRecord]) -> CrossingStats:
    """Crossing statistics against gamma_n; an empty run has none."""
    return count_crossings([row.size for row in rows], [row.gamma for row in rows])
