"""
Worker pool helpers for the sieve laboratory.

Scans are split into shards and mapped over a process pool; results always
come back in shard order, so output never depends on the worker count.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional, Tuple, TypeVar

from sieve_lab.constants import DEFAULT_WORKERS, WORKERS_ENV_VAR
from sieve_lab.errors import ConfigError

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """
    Read the worker count from the environment.

    Returns:
        The value of SIEVE_LAB_WORKERS, or DEFAULT_WORKERS when unset

    Raises:
        ConfigError: If the variable is not a positive integer
    """
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_WORKERS
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV_VAR}={raw!r} is not an integer") from None
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be >= 1, got {workers}")
    return workers


def iter_ordered(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> Iterator[R]:
    """
    Yield func(item) for each item, in item order, as soon as each is ready.

    func must be a module-level callable so it can be pickled. With one
    worker the items are processed lazily in the calling process.

    Args:
        func: Function applied to each item
        items: Work items
        workers: Process count; defaults to worker_count()

    Yields:
        Results in the order of items
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        yield from pool.map(func, items)


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Map func over items and collect the results in item order."""
    return list(iter_ordered(func, items, workers))


def split_range(lo: int, hi: int, shards: int) -> List[Tuple[int, int]]:
    """
    Split [lo, hi] into at most `shards` contiguous, ordered, non-empty pieces.

    Returns:
        List of (lo, hi) pairs covering [lo, hi]; empty when hi < lo
    """
    if hi < lo:
        return []
    total = hi - lo + 1
    shards = max(1, min(shards, total))
    step, extra = divmod(total, shards)
    pieces = []
    start = lo
    for i in range(shards):
        end = start + step + (1 if i < extra else 0) - 1
        pieces.append((start, end))
        start = end + 1
    return pieces
