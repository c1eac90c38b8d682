# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.inference.estimators import SpinEstimate
from dcppm.inference.metrics import (
    overlap,
    pair_agreement_exact,
    pair_agreement_given_estimate,
)


def test_overlap():
    truth = [1, 1, -1, -1]
    assert overlap(truth, [1, 1, -1, 1]) == 0.75
    assert overlap(truth, [-1, -1, 1, 1]) == 1.0
    assert overlap(truth, SpinEstimate([1, -1, 1, -1])) == 0.5
    with pytest.raises(ValueError):
        overlap(truth, [1, 1, -1])
    with pytest.raises(ValueError):
        overlap([], [])


def _tilted(size, correct):
    truth = np.repeat([1, -1], size)
    estimate = -np.ones(2 * size, dtype=int)
    estimate[:correct] = 1
    estimate[size : 2 * size - correct] = 1
    return truth, SpinEstimate(estimate)


def test_pair_agreement_exact():
    truth, est = _tilted(500, 350)
    expect = (350 * 349 + 150 * 149) / (500 * 499)
    assert np.isclose(pair_agreement_exact(truth, est), expect)
    # Half plus eps of the chosen vertices are + gives about 1/2 + 2 eps^2
    assert abs(pair_agreement_exact(truth, est) - 0.58) < 2e-3


def test_pair_agreement_random(seed=17):
    truth, est = _tilted(500, 350)
    exact = pair_agreement_exact(truth, est)
    mc = pair_agreement_given_estimate(truth, est, 20000, seed=seed)
    assert mc.count == 20000
    assert abs(mc.mean - exact) < 4 * mc.stderr


def test_pair_agreement_invalid():
    truth = [1, 1, -1, -1]
    with pytest.raises(ValueError):
        pair_agreement_exact(truth, SpinEstimate([1, 1, 1, -1], False))
    with pytest.raises(ValueError):
        pair_agreement_exact(truth, [1, -1, -1, -1])
    with pytest.raises(ValueError):
        pair_agreement_given_estimate(truth, [1, 1, -1, -1], 0)
