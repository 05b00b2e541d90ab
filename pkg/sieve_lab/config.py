"""
Configuration module for the sieve laboratory.

This module contains the RunConfig class: the parameters of one command,
read from an optional JSON file and overlaid with explicit command-line
flags, validated before any work starts.
"""
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

from sieve_lab.constants import (
    DEFAULT_FORMAT,
    DEFAULT_PERIOD_CAP,
    DEFAULT_SCAN_CAP,
    OUTPUT_FORMATS,
    SCENARIOS,
)
from sieve_lab.errors import ConfigError, SieveLabError
from sieve_lab.primes import default_oracle
from sieve_lab.residues import (
    RegularParams,
    SievingPrefix,
    random_regular_prefix,
    regular_prefix,
    validate_prefix,
)


@dataclass
class RunConfig:
    """
    Parameters of one command run.

    A prefix is given either explicitly (primes and residues), as a regular
    sequence (alpha, kappa and residues or a seed), or as the Eratosthenes
    pattern of a given depth.
    """

    command: str = ""
    # prefix
    primes: Optional[List[int]] = None
    residues: Optional[List[int]] = None
    alpha: Optional[int] = None
    kappa: Optional[int] = None
    seed: Optional[int] = None
    eratosthenes: Optional[int] = None
    # pattern window and depth
    depth: Optional[int] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    # total sieve and growth
    z: int = 0
    n_max: int = 0
    seeds: List[int] = field(default_factory=list)
    # tuples
    tuple: Optional[str] = None
    d: Optional[int] = None
    m: Optional[int] = None
    g: int = 1
    survivors: Optional[int] = None
    window_growth: Optional[int] = None
    # reproduce and primes
    scenario: Optional[str] = None
    limit: Optional[int] = None
    # output and caps
    output: Optional[str] = None
    format: str = DEFAULT_FORMAT
    scan_cap: int = DEFAULT_SCAN_CAP
    period_cap: int = DEFAULT_PERIOD_CAP

    @classmethod
    def field_names(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "RunConfig":
        """
        Build a config from a mapping of field values.

        Raises:
            ConfigError: If the mapping contains unknown keys
        """
        unknown = sorted(set(values) - set(cls.field_names()))
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
        return cls(**values)

    @classmethod
    def load(cls, path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        """
        Read a JSON config file and apply command-line overrides.

        Overrides set to None are ignored, so flags that were not given keep
        the file value.

        Args:
            path: JSON file, optional
            overrides: Values from explicit flags

        Returns:
            The validated config

        Raises:
            ConfigError: If the file is unreadable, is not a JSON object, or
                the merged values are invalid
        """
        values: Dict[str, Any] = {}
        if path is not None:
            try:
                values = json.loads(Path(path).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"cannot read config {path}: {e}") from None
            if not isinstance(values, dict):
                raise ConfigError(f"config {path} must hold a JSON object")
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        config = cls.from_dict(values)
        config.validate()
        return config

    def validate(self) -> None:
        """
        Check caps, format and the values the command refers to.

        Raises:
            ConfigError: On the first invalid value
        """
        if self.scan_cap < 1 or self.period_cap < 1:
            raise ConfigError("caps must be positive")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"format must be one of {OUTPUT_FORMATS}, got {self.format!r}")
        if self.n_max < 0:
            raise ConfigError(f"n_max must be >= 0, got {self.n_max}")
        if self.depth is not None and self.depth < 0:
            raise ConfigError(f"depth must be >= 0, got {self.depth}")
        if self.g < 1:
            raise ConfigError(f"g must be >= 1, got {self.g}")
        for name in ("survivors", "window_growth"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ConfigError(f"{name} must be >= 1, got {value}")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be in [0, 2**64), got {self.seed}")
        for seed in self.seeds:
            if not 0 <= seed < 2**64:
                raise ConfigError(f"seed must be in [0, 2**64), got {seed}")
        if self.scenario is not None and self.scenario not in SCENARIOS:
            raise ConfigError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if (self.lo is None) != (self.hi is None):
            raise ConfigError("window needs both lo and hi")
        if self.alpha is not None or self.kappa is not None:
            self.regular_params()
        if (self.command == "pattern" and self.depth is None and self.seed is not None
                and self.residues is None and self.eratosthenes is None):
            raise ConfigError("a seeded regular pattern needs --depth")

    def regular_params(self) -> Optional[RegularParams]:
        """
        Return the regular parameters, if the config names any.

        Raises:
            ConfigError: If only one of alpha and kappa is given, or they are invalid
        """
        if self.alpha is None and self.kappa is None:
            return None
        if self.alpha is None or self.kappa is None:
            raise ConfigError("alpha and kappa must be given together")
        try:
            return RegularParams(self.alpha, self.kappa)
        except SieveLabError as e:
            raise ConfigError(str(e)) from None

    def prefix(self, length: int) -> SievingPrefix:
        """
        Build the sieving prefix the config describes.

        Args:
            length: Number of classes needed when the prefix is generated

        Returns:
            The validated prefix

        Raises:
            ConfigError: If the config does not describe a prefix
            PrefixError: If explicit sequences violate a constraint
        """
        if self.eratosthenes is not None:
            return validate_prefix(default_oracle().first_primes(self.eratosthenes),
                                   (0,) * self.eratosthenes)
        params = self.regular_params()
        if params is not None:
            if self.residues is not None:
                return regular_prefix(params, self.residues)
            if self.seed is not None:
                return random_regular_prefix(params, length, self.seed)
            raise ConfigError("a regular prefix needs residues or a seed")
        if self.primes is not None and self.residues is not None:
            return validate_prefix(self.primes, self.residues)
        raise ConfigError("no prefix given: use primes/residues, alpha/kappa or eratosthenes")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
