# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.experiments.eigencheck import (
    expected_matrix,
    expected_matrix_eigencheck,
)
from dcppm.model.laws import WeightLaw
from dcppm.model.params import ModelParams


def test_expected_matrix():
    params = ModelParams(3.0, 1.0)
    matrix = expected_matrix([1, 1, -1], [1.0, 2.0, 1.0], params)
    assert np.allclose(np.diag(matrix), 0.0)
    assert np.allclose(matrix, matrix.T)
    assert np.isclose(matrix[0, 1], 2.0)
    assert np.isclose(matrix[0, 2], 1.0 / 3)


def test_no_signal(seed=4):
    result = expected_matrix_eigencheck(500, ModelParams(3.0, 3.0), seed=seed)
    assert np.isclose(result.theory2, 0.0)
    assert abs(result.lambda2) < 0.01
    assert abs(result.lambda1 - result.theory1) < 0.01


def test_limits(seed=12):
    params = ModelParams(4.0, 1.0, WeightLaw.uniform([1.0, 2.0]))
    result = expected_matrix_eigencheck(2000, params, seed=seed)
    assert np.isclose(result.theory1, 6.25)
    assert np.isclose(result.theory2, 3.75)
    assert abs(result.lambda1 / result.theory1 - 1) < 0.05
    assert abs(result.lambda2 / result.theory2 - 1) < 0.05
    assert result.cos_psi1 > 0.99
    assert result.cos_psi2 > 0.99
    assert result.to_dict()["n"] == 2000


def test_invalid():
    with pytest.raises(ValueError):
        expected_matrix_eigencheck(5000, ModelParams(1.0, 1.0))
    with pytest.raises(ValueError):
        expected_matrix_eigencheck(1, ModelParams(1.0, 1.0))
