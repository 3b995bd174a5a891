"""Worker-count resolution for the embarrassingly parallel value computations.

GRAPHTDA_THREADS caps internal parallelism: unset or 1 means sequential,
0 means one worker per CPU. Results are order-preserving either way, so
output never depends on the setting.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_MIN_PARALLEL_ITEMS = 256


def worker_count() -> int:
    raw = os.environ.get("GRAPHTDA_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"GRAPHTDA_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"GRAPHTDA_THREADS must be nonnegative, got {n}")
    if n == 0:
        return os.cpu_count() or 1
    return n


def map_ordered(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map preserving input order, threaded when configured and worthwhile."""
    seq = list(items)
    n = worker_count()
    if n <= 1 or len(seq) < _MIN_PARALLEL_ITEMS:
        return [fn(x) for x in seq]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, seq))
