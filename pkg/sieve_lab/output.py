"""
Output module for the sieve laboratory.

This module contains the row writer that streams CSV or JSON Lines to a
file or stdout, the exact formatting of rationals, and the RunManifest
written next to every output file.
"""
import csv
import datetime
import hashlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, TextIO

from sieve_lab.constants import FORMAT_CSV, FORMAT_JSON, MANIFEST_SUFFIX, VERSION


def format_rational(value: Optional[Fraction]) -> str:
    """
    Format an exact rational as "p/q"; integers keep the "/1".

    None (a bound that does not apply) becomes the empty string.
    """
    if value is None:
        return ""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


class RowWriter:
    """
    Streams data rows as CSV (with a header line) or JSON Lines.

    Every row is flushed as soon as it is written, so an interrupted run
    leaves every completed row on disk.
    """

    def __init__(self, header: Sequence[str], fmt: str = FORMAT_CSV,
                 path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
        """
        Initialise a writer.

        Args:
            header: Column names
            fmt: "csv" or "json"
            path: Output file; stdout (or `stream`) when omitted
            stream: Explicit destination stream, used when path is None
        """
        if fmt not in (FORMAT_CSV, FORMAT_JSON):
            raise ValueError(f"unknown output format {fmt!r}")
        self.header = tuple(header)
        self.fmt = fmt
        self.path = path
        self.rows_written = 0
        self._owned = path is not None
        self._stream = open(path, "w", encoding="utf-8", newline="") if self._owned else (stream or sys.stdout)
        self._csv = None
        if fmt == FORMAT_CSV:
            self._csv = csv.writer(self._stream, lineterminator="\n")
            self._csv.writerow(self.header)
            self._stream.flush()

    def write(self, values: Sequence[Any]) -> None:
        """Write one row given in header order."""
        if len(values) != len(self.header):
            raise ValueError(f"row has {len(values)} values, header has {len(self.header)}")
        if self._csv is not None:
            self._csv.writerow([_csv_cell(v) for v in values])
        else:
            record = {key: _json_value(v) for key, v in zip(self.header, values)}
            self._stream.write(json.dumps(record, separators=(",", ":")) + "\n")
        self._stream.flush()
        self.rows_written += 1

    def close(self) -> None:
        if self._owned:
            self._stream.close()

    def __enter__(self) -> "RowWriter":
        return self

    def __exit__(self, *exc: Any) -> None:
        self.close()


def utc_now_iso() -> str:
    return datetime.datetime.now(datetime.timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")


def canonical_json_bytes(obj: Any) -> bytes:
    """Serialise with sorted keys and fixed separators, for hashing."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=True, separators=(",", ":")).encode("utf-8")


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunManifest:
    """
    Provenance of one output file.

    Attributes:
        config: Echo of the run configuration
        version: Package version that produced the rows
        started_at: UTC start time (ISO 8601)
        finished_at: UTC end time, set by finish()
        config_sha256: Hash of the canonical config JSON
        rows: Number of data rows written
        summary: Command-specific results (period, density, verdicts)
    """

    config: Dict[str, Any]
    version: str = VERSION
    started_at: str = field(default_factory=utc_now_iso)
    finished_at: Optional[str] = None
    config_sha256: str = ""
    rows: int = 0
    summary: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.config_sha256:
            self.config_sha256 = sha256_hex(canonical_json_bytes(self.config))

    def finish(self, rows: int, summary: Optional[Dict[str, Any]] = None) -> None:
        self.rows = rows
        self.summary.update(summary or {})
        self.finished_at = utc_now_iso()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config,
            "version": self.version,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "config_sha256": self.config_sha256,
            "rows": self.rows,
            "summary": {key: _json_value(v) for key, v in self.summary.items()},
        }

    def write(self, output_path: str) -> Path:
        """
        Write the manifest as `<output_path>.manifest.json`.

        Returns:
            The manifest path
        """
        path = Path(str(output_path) + MANIFEST_SUFFIX)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        return path
