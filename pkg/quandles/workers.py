'''Thread fan-out. Results always come back in input order, so nothing a caller
computes depends on the number of workers.'''
import logging
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def parallel_map(func, items, threads=1):
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug('mapping %d items over %d threads', len(items), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
