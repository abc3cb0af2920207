"""Optional process parallelism, controlled by the PSI_GRH_THREADS variable."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

ENV_VAR = "PSI_GRH_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, min(n, os.cpu_count() or 1))


def pmap(fn, items) -> list:
    """map(fn, items) in worker processes when more than one worker is allowed.

    fn must be a module-level function.  Results keep the input order, so the
    outcome never depends on the worker count.
    """
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))
