"""
Worker pool for scan / verify
Results always come back in input order, whatever the worker count
"""
import logging
from multiprocessing import Pool
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def map_in_order(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Apply a picklable top-level function to every item

    Args:
        func: Module-level callable (or functools.partial of one)
        items: Work items
        jobs: Worker processes; 1 or less runs in-process

    Returns:
        Results in the order of items
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    workers = min(jobs, len(items))
    logger.info("dispatching %d items to %d workers", len(items), workers)
    with Pool(workers) as pool:
        return list(pool.imap(func, items, chunksize=1))
