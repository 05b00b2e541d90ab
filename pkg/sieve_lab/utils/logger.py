"""
Experiment logger module for the sieve laboratory.

This module contains the ExperimentLogger class for logging run events.
"""
import datetime
import logging
import sys
from typing import Any, Dict, List, Optional

LOGGER_NAME = "sieve_lab"
LOG_FORMAT = "[%(asctime)s] %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"


def configure_logging(debug: bool = False) -> logging.Logger:
    """
    Bind the package logger to the current stderr.

    Any handler from an earlier call is replaced, so the logger always
    writes to whatever sys.stderr is at configuration time.

    Args:
        debug: Whether to emit DEBUG events (per-step progress)

    Returns:
        The package logger
    """
    logger = logging.getLogger(LOGGER_NAME)
    for old in list(logger.handlers):
        logger.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    logger.addHandler(handler)
    logger.propagate = False
    logger.setLevel(logging.DEBUG if debug else logging.INFO)
    return logger


class ExperimentLogger:
    """
    Handles logging of experiment events: expansion steps, checks, run summaries.

    Every event is kept in an in-memory history as well as emitted through the
    standard logging package, so tests can inspect what a run reported.
    """

    def __init__(self, log_to_console: bool = True, debug: bool = False) -> None:
        """
        Initialise a new ExperimentLogger.

        Args:
            log_to_console: Whether to emit events to stderr
            debug: Whether DEBUG events (per-step progress) are emitted
        """
        self.log_to_console = log_to_console
        self.debug_mode = debug
        self.log_history: List[Dict[str, Any]] = []
        self._logger = configure_logging(debug) if log_to_console else None

    def log_event(self, kind: str, message: str, level: int = logging.INFO, **fields: Any) -> None:
        """
        Log an event.

        Args:
            kind: Upper-case event kind, e.g. STEP, CHECK, RUN
            message: Human-readable description
            level: logging level used for console emission
            fields: Structured values stored in the history
        """
        timestamp = datetime.datetime.now().strftime(LOG_DATE_FORMAT)
        if self._logger is not None:
            self._logger.log(level, "%s: %s", kind, message)
        self.log_history.append({
            "timestamp": timestamp,
            "kind": kind,
            "message": message,
            **fields,
        })

    def log_step(self, n: int, size: int, interval: str) -> None:
        """Log one expansion step at DEBUG level."""
        self.log_event("STEP", f"n={n} size={size} interval={interval}",
                       level=logging.DEBUG, n=n, size=size)

    def log_check(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        """Log the outcome of a reproduction check."""
        verdict = "PASS" if passed else "FAIL"
        message = f"{verdict} {name}" + (f" ({detail})" if detail else "")
        self.log_event("CHECK", message, level=logging.INFO if passed else logging.ERROR,
                       name=name, passed=passed)

    def warning(self, message: str, **fields: Any) -> None:
        self.log_event("WARNING", message, level=logging.WARNING, **fields)

    def error(self, message: str, **fields: Any) -> None:
        self.log_event("ERROR", message, level=logging.ERROR, **fields)

    def get_history(self, kind: Optional[str] = None) -> List[Dict[str, Any]]:
        """
        Get the event history.

        Args:
            kind: Only return events of this kind

        Returns:
            List of events in chronological order
        """
        if kind is None:
            return self.log_history
        return [event for event in self.log_history if event["kind"] == kind]
