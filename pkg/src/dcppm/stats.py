# -*- coding: utf-8 -*-

__all__ = [
    "MonteCarloEstimate",
    "TVEstimate",
    "mean_ci",
    "plugin_tv",
    "bootstrap_tv",
    "two_sample_chi2",
]

from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import chi2_contingency, norm

from .utils import get_rng


@dataclass(frozen=True)
class MonteCarloEstimate:
    """A Monte Carlo mean with a normal-approximation confidence interval"""

    mean: float
    lo: float
    hi: float
    stderr: float
    count: int
    confidence: float = 0.95

    def contains(self, value):
        return self.lo <= value <= self.hi

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class TVEstimate:
    """A plug-in total variation estimate with a bootstrap interval"""

    tv: float
    lo: float
    hi: float
    n_x: int
    n_y: int

    def to_dict(self):
        return asdict(self)


def mean_ci(values, confidence=0.95):
    """Summarize samples by their mean and a normal confidence interval

    Args:
        values: A 1-D array of i.i.d. samples. Non-finite entries are
            ignored.
        confidence (float): The coverage of the interval (default 0.95).

    Returns:
        MonteCarloEstimate: The summary. With fewer than two finite samples
        the interval collapses onto the mean (or is ``nan``).

    """
    values = np.asarray(values, dtype=float).ravel()
    values = values[np.isfinite(values)]
    count = len(values)
    if count == 0:
        return MonteCarloEstimate(
            np.nan, np.nan, np.nan, np.nan, 0, confidence
        )
    mean = float(np.mean(values))
    if count == 1:
        return MonteCarloEstimate(mean, mean, mean, 0.0, 1, confidence)
    stderr = float(np.std(values, ddof=1) / np.sqrt(count))
    z = norm.ppf(0.5 + 0.5 * confidence)
    return MonteCarloEstimate(
        mean, mean - z * stderr, mean + z * stderr, stderr, count, confidence
    )


def _encode(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    if x.ndim == 1:
        x = x[:, None]
    if y.ndim == 1:
        y = y[:, None]
    if x.shape[1:] != y.shape[1:]:
        raise ValueError("samples must have the same number of columns")
    both = np.concatenate((x, y), axis=0)
    if len(both) == 0:
        return np.zeros(0, int), np.zeros(0, int), 0
    _, codes = np.unique(both, axis=0, return_inverse=True)
    codes = np.asarray(codes).ravel()
    return codes[: len(x)], codes[len(x) :], int(codes.max()) + 1


def _tv_from_counts(cx, cy):
    nx = cx.sum(axis=-1, keepdims=True)
    ny = cy.sum(axis=-1, keepdims=True)
    px = np.divide(cx, nx, out=np.zeros_like(cx, dtype=float), where=nx > 0)
    py = np.divide(cy, ny, out=np.zeros_like(cy, dtype=float), where=ny > 0)
    tv = 0.5 * np.abs(px - py).sum(axis=-1)
    # An empty sample only matches another empty sample
    empty = (nx[..., 0] == 0) != (ny[..., 0] == 0)
    return np.where(empty, 1.0, tv)


def plugin_tv(x, y):
    """The plug-in total variation distance between two discrete samples

    Args:
        x: The first sample, either a 1-D array of categories or a 2-D array
            whose rows are categories.
        y: The second sample, in the same format.

    """
    cx, cy, k = _encode(x, y)
    return float(
        _tv_from_counts(
            np.bincount(cx, minlength=k).astype(float),
            np.bincount(cy, minlength=k).astype(float),
        )
    )


def _group_counts(codes, groups, k):
    if groups is None:
        groups = np.arange(len(codes))
    groups = np.asarray(groups, dtype=int)
    num = int(groups.max()) + 1 if len(groups) else 0
    table = np.zeros((num, k))
    np.add.at(table, (groups, codes), 1.0)
    return table


def bootstrap_tv(
    x,
    y,
    n_boot=1000,
    confidence=0.95,
    seed=None,
    x_groups=None,
    y_groups=None,
    x_num_groups=None,
    y_num_groups=None,
):
    """Plug-in total variation distance with a percentile bootstrap interval

    When the observations come in groups (for example all the children of
    the root of one sampled tree), the groups rather than the observations
    are resampled.

    Args:
        x, y: The samples (see :func:`plugin_tv`).
        n_boot (int): The number of bootstrap resamples (default 1000).
        confidence (float): The coverage of the interval.
        seed: The random seed for the resampling.
        x_groups, y_groups (Optional): Integer group labels per observation.
        x_num_groups, y_num_groups (Optional): The number of groups,
            including groups without any observation.

    Returns:
        TVEstimate: The estimate and its interval.

    """
    rng = get_rng(seed)
    cx, cy, k = _encode(x, y)
    tx = _group_counts(cx, x_groups, k)
    ty = _group_counts(cy, y_groups, k)
    if x_num_groups is not None and x_num_groups > len(tx):
        tx = np.vstack((tx, np.zeros((x_num_groups - len(tx), k))))
    if y_num_groups is not None and y_num_groups > len(ty):
        ty = np.vstack((ty, np.zeros((y_num_groups - len(ty), k))))
    tv = float(_tv_from_counts(tx.sum(axis=0), ty.sum(axis=0)))
    if k == 0 or len(tx) == 0 or len(ty) == 0:
        return TVEstimate(tv, tv, tv, len(cx), len(cy))

    stats = np.empty(int(n_boot))
    nx, ny = len(tx), len(ty)
    for i in range(int(n_boot)):
        wx = np.bincount(rng.integers(nx, size=nx), minlength=nx)
        wy = np.bincount(rng.integers(ny, size=ny), minlength=ny)
        stats[i] = _tv_from_counts(wx @ tx, wy @ ty)
    alpha = 0.5 * (1 - confidence)
    lo, hi = np.percentile(stats, [100 * alpha, 100 * (1 - alpha)])
    return TVEstimate(tv, float(lo), float(hi), len(cx), len(cy))


def two_sample_chi2(x, y, min_expected=5.0):
    """Chi-square two-sample test for equality of two discrete laws

    Categories whose expected count falls below ``min_expected`` in either
    sample are pooled into a single category.

    Returns:
        float: The p-value of the test (``1.0`` when only one category was
        observed).

    """
    cx, cy, k = _encode(x, y)
    table = np.vstack(
        (np.bincount(cx, minlength=k), np.bincount(cy, minlength=k))
    )
    table = table[:, table.sum(axis=0) > 0].astype(float)
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / table.sum()
    rare = expected.min(axis=0) < min_expected
    if rare.any():
        pooled = table[:, rare].sum(axis=1, keepdims=True)
        table = np.hstack((table[:, ~rare], pooled))
    if table.shape[1] < 2:
        return 1.0
    return float(chi2_contingency(table, correction=False)[1])
