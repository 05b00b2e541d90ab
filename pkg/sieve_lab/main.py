"""
Main entry point for the sieve laboratory.
"""
import argparse
import json
import sys
import os
from typing import Any, Callable, Dict, List, Optional, Sequence

# Add the project directory to the Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Now we can use absolute imports
from sieve_lab.config import RunConfig
from sieve_lab.constants import (
    EXIT_CAP_EXCEEDED,
    EXIT_MISMATCH,
    EXIT_SUCCESS,
    EXIT_VALIDATION_ERROR,
    EXPERIMENT_HEADER,
    GROWTH_HEADER,
    OUTPUT_FORMATS,
    PATTERN_HEADER,
    PRIMES_HEADER,
    SCENARIOS,
    SURVIVOR_HEADER,
    VERSION,
    WINDOW_GROWTH_HEADER,
)
from sieve_lab.errors import CapExceeded, ConfigError, MismatchReport, SieveLabError
from sieve_lab.experiments import Reproduction, run_growth_experiment
from sieve_lab.intervals import IntegerInterval
from sieve_lab.output import RowWriter, RunManifest
from sieve_lab.patterns import Pattern, average_density, fundamental_period, materialize_period
from sieve_lab.primes import primes_oracle
from sieve_lab.total_sieve import expand_total_sieve
from sieve_lab.tuples import KTuple, choose_anchor, reduce_to_regular, survivors, window_growth
from sieve_lab.utils.console import print_key_values
from sieve_lab.utils.logger import ExperimentLogger

WriterFactory = Callable[[Sequence[str]], RowWriter]


class SieveLabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the validation status."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION_ERROR, f"{self.prog}: error: {message}\n")


def int_list(text: str) -> List[int]:
    """Parse "3,3,5" into [3, 3, 5]."""
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file with run parameters; flags override it")
    parser.add_argument("--output", help="Write data rows to this file (and a .manifest.json)")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="Row format (default: csv)")
    parser.add_argument("--scan-cap", type=int, help="Positions scanned per expansion step")
    parser.add_argument("--period-cap", type=int, help="Longest period materialised")
    parser.add_argument("--debug", action="store_true", help="Log every expansion step")


def _add_prefix(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--primes", type=int_list, help="Prime sieving sequence, e.g. 3,3,5,5")
    parser.add_argument("--residues", type=int_list, help="Residue sieving sequence, e.g. 1,2,4,0")
    parser.add_argument("--alpha", type=int, help="Regular sequence: index of the first prime")
    parser.add_argument("--kappa", type=int, help="Regular sequence: classes per prime")
    parser.add_argument("--seed", type=int, help="Seed for random residues of a regular sequence")
    parser.add_argument("--eratosthenes", type=int, help="Use the Eratosthenes pattern of this depth")


def build_parser() -> argparse.ArgumentParser:
    """Build the command-line parser with one subcommand per experiment."""
    parser = SieveLabArgumentParser(prog="sieve_lab", description="Sieving pattern laboratory.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=SieveLabArgumentParser)

    pattern = commands.add_parser("pattern", help="Pattern values, period and density")
    _add_prefix(pattern)
    pattern.add_argument("--depth", type=int,
                         help="Active classes (default: whole prefix; required with --seed)")
    pattern.add_argument("--lo", type=int, help="First position (default: one fundamental period)")
    pattern.add_argument("--hi", type=int, help="Last position")
    _add_common(pattern)

    total = commands.add_parser("total-sieve", help="Expanding total sieve around z")
    _add_prefix(total)
    total.add_argument("--z", type=int, help="Centre position (default: 0)")
    total.add_argument("--n-max", type=int, help="Last expansion step")
    _add_common(total)

    ktuple = commands.add_parser("tuple", help="Anchor, reduced classes and survivors of a tuple")
    ktuple.add_argument("tuple", help="Offsets, e.g. 0,2,6")
    ktuple.add_argument("--d", type=int, help="Anchor index (default: smallest valid)")
    ktuple.add_argument("--m", type=int, help="Anchor position (default: smallest match)")
    ktuple.add_argument("--g", type=int, help="Sieving primes of the reduced pattern (default: 1)")
    ktuple.add_argument("--survivors", type=int, metavar="N", help="List survivors at depth N")
    ktuple.add_argument("--window-growth", type=int, metavar="N",
                        help="Tabulate window sizes against gamma for n = 1..N")
    _add_common(ktuple)

    reproduce = commands.add_parser("reproduce", help="Check a worked example")
    reproduce.add_argument("scenario", choices=SCENARIOS)
    _add_common(reproduce)

    primes = commands.add_parser("primes", help="List primes up to a limit")
    primes.add_argument("--limit", type=int, required=True)
    _add_common(primes)

    growth = commands.add_parser("growth", help="Growth runs on seeded random regular prefixes")
    growth.add_argument("--alpha", type=int)
    growth.add_argument("--kappa", type=int)
    growth.add_argument("--seeds", type=int_list, help="Comma-separated seeds")
    growth.add_argument("--z", type=int)
    growth.add_argument("--n-max", type=int)
    _add_common(growth)
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """Keep the parsed flags that map onto RunConfig fields."""
    names = set(RunConfig.field_names())
    values = {key: value for key, value in vars(args).items() if key in names}
    return {key: value for key, value in values.items() if value is not None}


def cmd_pattern(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """Emit (z, bit) rows with the period and density summary."""
    prefix = config.prefix(config.depth or 0)
    pattern = Pattern(prefix, config.depth)
    period = fundamental_period(pattern)
    density = average_density(pattern)
    writer = open_writer(PATTERN_HEADER)
    if config.lo is None:
        for i, bit in enumerate(materialize_period(pattern, config.period_cap)):
            writer.write((i + 1, int(bit)))
    else:
        for z in IntegerInterval.spanning(config.lo, config.hi):
            writer.write((z, pattern(z)))
    logger.log_event("SUMMARY", f"period={period} density={density}", period=period)
    return {"period": period, "density": density.value}


def cmd_total_sieve(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """Stream the expanding total sieve rows."""
    prefix = config.prefix(config.n_max)
    params = config.regular_params() or prefix.regular_params()
    writer = open_writer(GROWTH_HEADER)
    series = expand_total_sieve(
        prefix, config.z, config.n_max, params=params, scan_cap=config.scan_cap,
        sink=lambda r: writer.write((r.n, r.size, r.beta_star, r.gamma, r.crossed)),
        logger=logger,
    )
    final = series.intervals[-1] if series.intervals else IntegerInterval.empty()
    logger.log_event("RUN", f"z={config.z} steps={len(series)} final={final}")
    return {"final_interval": str(final), "final_size": final.size}


def cmd_tuple(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """Print the anchor and reduced classes, then the survivors or window-growth table."""
    if config.tuple is None:
        raise ConfigError("tuple offsets are required")
    anchor = choose_anchor(KTuple.parse(config.tuple), m=config.m, d=config.d)
    reduced = reduce_to_regular(anchor, config.g)
    print_key_values([("tuple", str(anchor.ktuple)), ("d", anchor.d), ("m", anchor.m),
                      ("step", anchor.primorial)])
    print(json.dumps(reduced.to_json()))
    summary: Dict[str, Any] = {"d": anchor.d, "m": anchor.m, "reduced": reduced.to_json()}
    if config.survivors is not None:
        writer = open_writer(SURVIVOR_HEADER)
        rows = survivors(anchor, config.survivors)
        for row in rows:
            writer.write((row.z, row.position, row.all_prime))
        if not all(row.all_prime for row in rows):
            logger.warning("a survivor has a composite element")
        summary["survivors"] = len(rows)
    elif config.window_growth is not None:
        writer = open_writer(WINDOW_GROWTH_HEADER)
        for row in window_growth(anchor, config.window_growth):
            writer.write((row.n, row.window_size, row.gamma))
    return summary


def cmd_reproduce(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """Run a reproduction scenario; raises MismatchReport on any failed check."""
    if config.scenario is None:
        raise ConfigError("a scenario is required")
    results = Reproduction(config.scenario, logger).run()
    return {"checks": len(results), "passed": sum(r.passed for r in results)}


def cmd_primes(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """List the primes up to the limit."""
    if config.limit is None:
        raise ConfigError("a limit is required")
    primes = primes_oracle(config.limit)
    writer = open_writer(PRIMES_HEADER)
    for p in primes:
        writer.write((p,))
    return {"count": len(primes)}


def cmd_growth(config: RunConfig, logger: ExperimentLogger, open_writer: WriterFactory) -> Dict[str, Any]:
    """Run the seeded growth experiment, streaming rows in (seed, n) order."""
    params = config.regular_params()
    if params is None:
        raise ConfigError("growth needs alpha and kappa")
    if not config.seeds:
        raise ConfigError("growth needs at least one seed")
    writer = open_writer(EXPERIMENT_HEADER)
    runs = run_growth_experiment(
        params, config.seeds, config.z, config.n_max, scan_cap=config.scan_cap, logger=logger,
        sink=lambda seed, r: writer.write((seed, r.n, r.size, r.beta_star, r.gamma, r.crossed)),
    )
    return {"crossings": {str(run.seed): run.crossings.crossings for run in runs}}


COMMANDS: Dict[str, Callable[[RunConfig, ExperimentLogger, WriterFactory], Dict[str, Any]]] = {
    "pattern": cmd_pattern,
    "total-sieve": cmd_total_sieve,
    "tuple": cmd_tuple,
    "reproduce": cmd_reproduce,
    "primes": cmd_primes,
    "growth": cmd_growth,
}


def run_command(config: RunConfig, logger: ExperimentLogger) -> int:
    """
    Run the configured command and write its manifest.

    Args:
        config: Validated run configuration
        logger: ExperimentLogger instance

    Returns:
        EXIT_SUCCESS; failures propagate as SieveLabError subclasses
    """
    handler = COMMANDS.get(config.command)
    if handler is None:
        raise ConfigError(f"unknown command {config.command!r}")
    manifest = RunManifest(config.to_dict())
    writers: List[RowWriter] = []

    def open_writer(header: Sequence[str]) -> RowWriter:
        writer = RowWriter(header, config.format, config.output)
        writers.append(writer)
        return writer

    summary: Dict[str, Any] = {}
    try:
        summary = handler(config, logger, open_writer)
    except SieveLabError as e:
        summary = {"error": str(e)}
        raise
    finally:
        for writer in writers:
            writer.close()
        if config.output is not None:
            manifest.finish(sum(w.rows_written for w in writers), summary)
            manifest.write(config.output)
    return EXIT_SUCCESS


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the sieve laboratory command line."""
    args = build_parser().parse_args(argv)
    logger = ExperimentLogger(debug=args.debug)
    try:
        config = RunConfig.load(args.config, overrides_from_args(args))
        return run_command(config, logger)
    except MismatchReport as e:
        logger.error(str(e))
        return EXIT_MISMATCH
    except CapExceeded as e:
        logger.error(str(e))
        return EXIT_CAP_EXCEEDED
    except SieveLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_VALIDATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
