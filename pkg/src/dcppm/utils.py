# -*- coding: utf-8 -*-

__all__ = [
    "logger",
    "get_rng",
    "spawn_seeds",
    "stable_seed",
    "get_progress_bar",
    "parallel_map",
]

import hashlib
import logging
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

logger = logging.getLogger("dcppm")


def get_rng(seed=None):
    """Get a ``numpy.random.Generator`` for any of the supported seed types

    Args:
        seed: ``None``, an integer, a ``numpy.random.SeedSequence`` or an
            existing ``numpy.random.Generator`` (returned unchanged).

    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_seeds(seed, count):
    """Split a seed into ``count`` independent child seed sequences

    If ``seed`` is a ``Generator``, the children are seeded from integers
    drawn from it so that the parent stream advances.

    """
    if isinstance(seed, np.random.Generator):
        entropy = seed.integers(0, 2 ** 63, size=4)
        seed = np.random.SeedSequence([int(e) for e in entropy])
    elif not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return seed.spawn(int(count))


def stable_seed(*parts):
    """A stable 64-bit integer hash of a tuple of simple values

    The result does not depend on the Python hash seed, the platform or the
    process, so it can be used to derive reproducible per-cell seeds.

    """
    text = "|".join(repr(p) for p in parts).encode("utf-8")
    digest = hashlib.blake2b(text, digest_size=8).digest()
    return int.from_bytes(digest, "little")


def get_progress_bar(progress_bar=True, **kwargs):
    """Get a ``tqdm`` progress bar or ``None``

    Args:
        progress_bar: ``True`` to build a new bar, ``False`` to disable it,
            or an existing object with ``update`` and ``close`` methods.

    """
    if progress_bar is False or progress_bar is None:
        return None
    if progress_bar is True:
        if "DCPPM_NO_AUTO_PBAR" in os.environ:
            from tqdm import tqdm
        else:
            from tqdm.auto import tqdm

        return tqdm(**kwargs)
    return progress_bar


def parallel_map(func, items, n_jobs=1, progress_bar=False, desc=None):
    """Map a picklable function over a list, in order

    Results are returned in the order of ``items`` regardless of how the
    work was scheduled.

    Args:
        func: A module-level function of one argument.
        items: The arguments.
        n_jobs (int): The number of worker processes. ``1`` (default) runs in
            the calling process.
        progress_bar: Passed to :func:`get_progress_bar`.

    """
    items = list(items)
    bar = get_progress_bar(progress_bar, total=len(items), desc=desc)
    results = []
    try:
        if n_jobs is None or int(n_jobs) <= 1:
            for item in items:
                results.append(func(item))
                if bar is not None:
                    bar.update()
        else:
            with ProcessPoolExecutor(max_workers=int(n_jobs)) as pool:
                for result in pool.map(func, items):
                    results.append(result)
                    if bar is not None:
                        bar.update()
    finally:
        if bar is not None:
            bar.close()
    return results
