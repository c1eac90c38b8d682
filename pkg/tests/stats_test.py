# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.stats import (
    MonteCarloEstimate,
    bootstrap_tv,
    mean_ci,
    plugin_tv,
    two_sample_chi2,
)


def test_mean_ci(seed=1):
    rng = np.random.default_rng(seed)
    est = mean_ci(rng.normal(2.0, 1.0, 10000))
    assert isinstance(est, MonteCarloEstimate)
    assert est.lo < est.mean < est.hi
    assert est.contains(2.0)
    assert np.isclose(est.stderr, 0.01, rtol=0.1)
    assert est.count == 10000


def test_mean_ci_small():
    assert np.isnan(mean_ci([]).mean)
    est = mean_ci([3.0])
    assert est.lo == est.hi == 3.0
    est = mean_ci([1.0, np.nan, 3.0])
    assert est.count == 2
    assert est.mean == 2.0


def test_plugin_tv():
    assert plugin_tv([0, 0, 1, 1], [0, 0, 1, 1]) == 0.0
    assert plugin_tv([0, 0], [1, 1]) == 1.0
    assert np.isclose(plugin_tv([0, 1, 1, 1], [0, 0, 0, 1]), 0.5)
    rows = np.array([[0, 1], [1, 0]])
    assert np.isclose(plugin_tv(rows, rows[::-1]), 0.0)
    assert np.isclose(plugin_tv(rows, rows[:1]), 0.5)


def test_bootstrap_tv(seed=2):
    rng = np.random.default_rng(seed)
    x = rng.poisson(2.0, 3000)
    y = rng.poisson(3.0, 3000)
    est = bootstrap_tv(x, y, n_boot=300, seed=seed)
    assert 0 <= est.lo <= est.tv <= est.hi <= 1
    assert est.n_x == est.n_y == 3000
    # The true distance between Poi(2) and Poi(3) is about 0.23
    assert est.lo < 0.3 and est.hi > 0.17


def test_bootstrap_tv_groups(seed=3):
    x = np.array([0, 1, 1, 2])
    y = np.array([0, 1])
    est = bootstrap_tv(
        x,
        y,
        n_boot=100,
        seed=seed,
        x_groups=[0, 0, 1, 1],
        y_groups=[0, 1],
        x_num_groups=3,
        y_num_groups=3,
    )
    assert 0 <= est.lo <= est.hi <= 1


def test_bootstrap_empty():
    est = bootstrap_tv(np.zeros(0), np.zeros(0), n_boot=10)
    assert est.tv == 0.0


def test_two_sample_chi2(seed=4):
    rng = np.random.default_rng(seed)
    x = rng.poisson(2.0, 2000)
    assert two_sample_chi2(x, rng.poisson(2.0, 2000)) > 0.001
    assert two_sample_chi2(x, rng.poisson(2.5, 2000)) < 0.001
    assert two_sample_chi2([1, 1], [1, 1, 1]) == 1.0


@pytest.mark.parametrize("confidence", [0.9, 0.95, 0.99])
def test_coverage_widens(confidence, seed=5):
    values = np.random.default_rng(seed).normal(size=100)
    narrow = mean_ci(values, confidence=0.5)
    wide = mean_ci(values, confidence=confidence)
    assert wide.hi - wide.lo > narrow.hi - narrow.lo
