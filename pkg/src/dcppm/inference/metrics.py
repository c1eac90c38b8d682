# -*- coding: utf-8 -*-

__all__ = ["overlap", "pair_agreement_given_estimate", "pair_agreement_exact"]

import numpy as np

from ..stats import mean_ci
from ..utils import get_rng
from .estimators import SpinEstimate


def _spins(truth, estimate):
    if isinstance(estimate, SpinEstimate):
        estimate = estimate.assignment
    truth = np.asarray(truth).ravel()
    estimate = np.asarray(estimate).ravel()
    if truth.shape != estimate.shape:
        raise ValueError("truth and estimate must have the same length")
    return truth, estimate


def overlap(truth, estimate):
    """The agreement fraction, maximized over a global spin flip"""
    truth, estimate = _spins(truth, estimate)
    if not len(truth):
        raise ValueError("empty assignment")
    agree = np.mean(truth == estimate)
    return float(max(agree, 1 - agree))


def _positive(truth, estimate):
    if isinstance(estimate, SpinEstimate) and not estimate.bisection:
        raise ValueError("pair agreement needs a bisection estimate")
    truth, estimate = _spins(truth, estimate)
    chosen = truth[estimate > 0]
    if len(chosen) < 2:
        raise ValueError("need at least two vertices estimated +")
    return chosen


def pair_agreement_given_estimate(truth, estimate, trials, seed=None):
    """Monte Carlo probability that two vertices estimated ``+`` agree

    Uniform pairs of distinct vertices with estimate ``+`` are drawn and the
    frequency of equal true spins is reported.

    Returns:
        MonteCarloEstimate: The frequency with its interval.

    """
    chosen = _positive(truth, estimate)
    trials = int(trials)
    if trials < 1:
        raise ValueError("trials must be at least one")
    rng = get_rng(seed)
    k = len(chosen)
    i = rng.integers(k, size=trials)
    j = rng.integers(k - 1, size=trials)
    j += j >= i
    return mean_ci(chosen[i] == chosen[j])


def pair_agreement_exact(truth, estimate):
    """The exact fraction of agreeing pairs among vertices estimated ``+``"""
    chosen = _positive(truth, estimate)
    k = len(chosen)
    plus = int(np.sum(chosen > 0))
    minus = k - plus
    return (plus * (plus - 1) + minus * (minus - 1)) / (k * (k - 1))
