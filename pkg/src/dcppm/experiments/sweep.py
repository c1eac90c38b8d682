# -*- coding: utf-8 -*-

__all__ = [
    "COLUMNS",
    "ESTIMATORS",
    "SweepConfig",
    "SweepRow",
    "threshold_sweep",
    "rows_to_frame",
    "write_sweep",
    "metadata_path",
]

import datetime
import json
import os
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd

from ..graphs.components import largest_component_fraction
from ..graphs.sampling import sample_dcppm
from ..inference.estimators import random_bisection, spectral_bisection
from ..inference.metrics import overlap
from ..model.laws import parse_weight_law
from ..model.params import ModelParams, params_from_threshold
from ..stats import mean_ci
from ..utils import logger, parallel_map, spawn_seeds, stable_seed

COLUMNS = [
    "a",
    "b",
    "phi2",
    "stat",
    "n",
    "estimator",
    "overlap_mean",
    "overlap_lo",
    "overlap_hi",
    "giant_frac",
    "seed",
]

ESTIMATORS = ("adjacency", "nonbacktracking", "random")


@dataclass
class SweepConfig:
    """The grid, sizes and estimators of a threshold sweep

    The grid is given in exactly one of three ways: ``a`` and ``b`` lists
    (their product), ``pairs`` of ``(a, b)``, or ``stats`` together with
    ``degree`` (pairs with the given threshold statistics and ``a + b``).

    """

    n: list
    trials: int = 20
    a: list = None
    b: list = None
    pairs: list = None
    stats: list = None
    degree: float = None
    law: object = None
    estimators: tuple = ("nonbacktracking",)
    seed: int = 0
    output: str = None
    method: str = "auto"
    n_jobs: int = 1
    confidence: float = 0.95
    points: list = field(init=False, repr=False)

    def __post_init__(self):
        self.law = parse_weight_law(self.law)
        self.n = [int(v) for v in np.atleast_1d(self.n)]
        self.trials = int(self.trials)
        self.estimators = tuple(self.estimators)
        if self.trials < 1:
            raise ValueError("trials must be at least one")
        unknown = set(self.estimators) - set(ESTIMATORS)
        if unknown:
            raise ValueError("unknown estimators {0}".format(sorted(unknown)))

        given = [
            self.a is not None or self.b is not None,
            self.pairs is not None,
            self.stats is not None,
        ]
        if sum(given) != 1:
            raise ValueError("give exactly one of a/b, pairs or stats")
        if given[0]:
            if self.a is None or self.b is None:
                raise ValueError("a product grid needs both a and b")
            self.points = [
                (i, j, ModelParams(a, b, self.law))
                for i, a in enumerate(self.a)
                for j, b in enumerate(self.b)
            ]
        elif given[1]:
            self.points = [
                (i, 0, ModelParams(a, b, self.law))
                for i, (a, b) in enumerate(self.pairs)
            ]
        else:
            if self.degree is None:
                raise ValueError("a statistic grid needs the degree a + b")
            self.points = [
                (i, 0, params_from_threshold(s, self.degree, self.law))
                for i, s in enumerate(self.stats)
            ]

        for _, _, params in self.points:
            if params.total_rate <= 0:
                raise ValueError("every grid point needs a + b > 0")
            if params.kappa_max > min(self.n):
                raise ValueError(
                    "{0} has edge probabilities above one at n={1}".format(
                        params, min(self.n)
                    )
                )

    def to_dict(self):
        data = {
            "n": self.n,
            "trials": self.trials,
            "law": self.law.to_dict(),
            "estimators": list(self.estimators),
            "seed": self.seed,
            "output": self.output,
            "method": self.method,
            "n_jobs": self.n_jobs,
            "confidence": self.confidence,
        }
        for key in ("a", "b", "pairs", "stats", "degree"):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_file(cls, path):
        with open(path, "r") as f:
            return cls.from_dict(json.load(f))


@dataclass(frozen=True)
class SweepRow:
    a: float
    b: float
    phi2: float
    stat: float
    n: int
    estimator: str
    overlap_mean: float
    overlap_lo: float
    overlap_hi: float
    giant_frac: float
    seed: int


def _estimate(graph, estimator, rng):
    if estimator == "random":
        return random_bisection(graph.n, seed=rng)
    return spectral_bisection(graph, method=estimator, seed=rng)


def _run_cell(args):
    params, n, estimator, trials, seed, method, confidence = args
    try:
        overlaps = []
        giant = []
        for child in spawn_seeds(seed, trials):
            rng = np.random.default_rng(child)
            graph = sample_dcppm(n, params, seed=rng, method=method)
            estimate = _estimate(graph, estimator, rng)
            overlaps.append(overlap(graph.spins, estimate))
            giant.append(largest_component_fraction(graph))
    except Exception as e:
        return None, None, "{0}: {1}".format(type(e).__name__, e)
    return mean_ci(overlaps, confidence=confidence), np.mean(giant), None


def threshold_sweep(config, progress_bar=False):
    """Run every estimator on every grid point and size

    Each cell (grid point, ``n``, estimator) gets its own seed, a stable
    hash of the master seed and the cell coordinates, so cells do not
    depend on each other or on the scheduling. A failing cell is logged and
    reported with ``nan`` overlaps; the run continues.

    Args:
        config (SweepConfig): The sweep.
        progress_bar: Show a progress bar over cells.

    Returns:
        (list, list): The rows in grid order and the failures, one
        dictionary per failed cell. When ``config.output`` is set the rows
        are written with :func:`write_sweep`.

    """
    cells = []
    for i, j, params in config.points:
        for n in config.n:
            for estimator in config.estimators:
                seed = stable_seed(config.seed, i, j, n, estimator)
                cells.append((params, n, estimator, seed))
    logger.info("threshold sweep over %d cells", len(cells))
    results = parallel_map(
        _run_cell,
        [
            (p, n, e, config.trials, s, config.method, config.confidence)
            for p, n, e, s in cells
        ],
        n_jobs=config.n_jobs,
        progress_bar=progress_bar,
        desc="sweep",
    )

    rows = []
    failures = []
    for (params, n, estimator, seed), (est, giant, error) in zip(
        cells, results
    ):
        if error is not None:
            logger.warning(
                "sweep cell a=%s b=%s n=%d %s failed: %s",
                params.a,
                params.b,
                n,
                estimator,
                error,
            )
            failures.append(
                {
                    "a": params.a,
                    "b": params.b,
                    "n": n,
                    "estimator": estimator,
                    "seed": seed,
                    "error": error,
                }
            )
            mean = lo = hi = giant = np.nan
        else:
            mean, lo, hi = est.mean, est.lo, est.hi
        rows.append(
            SweepRow(
                a=params.a,
                b=params.b,
                phi2=params.law.m2,
                stat=params.threshold_stat,
                n=n,
                estimator=estimator,
                overlap_mean=mean,
                overlap_lo=lo,
                overlap_hi=hi,
                giant_frac=float(giant),
                seed=seed,
            )
        )
    if config.output is not None:
        write_sweep(rows, config.output, config=config, failures=failures)
    return rows, failures


def rows_to_frame(rows):
    """The sweep rows as a ``pandas.DataFrame`` with the fixed columns"""
    return pd.DataFrame([asdict(row) for row in rows], columns=COLUMNS)


def metadata_path(path):
    root, _ = os.path.splitext(str(path))
    return root + ".meta.json"


def write_sweep(rows, path, config=None, failures=()):
    """Write the rows to CSV and the run metadata to a JSON sidecar

    The CSV depends only on the rows; the timestamp, package version,
    configuration and failures go to ``<name>.meta.json``.

    """
    from .. import __version__

    rows_to_frame(rows).to_csv(path, index=False)
    meta = {
        "timestamp": datetime.datetime.now().isoformat(),
        "version": __version__,
        "config": None if config is None else config.to_dict(),
        "failures": list(failures),
    }
    with open(metadata_path(path), "w") as f:
        json.dump(meta, f, indent=2)
    logger.info("wrote %d rows to %s", len(rows), path)
