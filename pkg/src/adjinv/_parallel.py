"""Deterministic fan-out for the per-entry minor-sum loops.

Entries of a minor-sum representation are independent, so they may be
computed on worker threads.  Results are combined in input order and the
arithmetic is exact, so the output is identical for every thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None) -> list[R]:
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
