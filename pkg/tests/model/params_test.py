# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.model.laws import WeightLaw, size_biased
from dcppm.model.params import (
    ModelParams,
    base_type_law,
    kernel,
    ks_threshold_stat,
    lambda_total,
    offspring_type_law,
    params_from_threshold,
)
from dcppm.model.types import SignedType


def test_kappa():
    params = ModelParams(4.0, 1.0, WeightLaw.uniform([1.0, 2.0]))
    assert params.kappa_max == 16.0
    assert params.kappa_min == 1.0
    assert np.isclose(params.epsilon, 0.2)


@pytest.mark.parametrize("a, b", [(-1.0, 1.0), (1.0, np.inf), (np.nan, 1.0)])
def test_invalid(a, b):
    with pytest.raises(ValueError):
        ModelParams(a, b)


def test_empty_model():
    params = ModelParams(0.0, 0.0)
    assert params.total_rate == 0.0
    with pytest.raises(ValueError):
        ks_threshold_stat(params)
    with pytest.raises(ValueError):
        params.epsilon
    with pytest.raises(ValueError):
        offspring_type_law(1.0, params)


def test_kernel():
    params = ModelParams(3.0, 1.0, WeightLaw.uniform([1.0, 2.0]))
    assert kernel(SignedType(1, 2.0), SignedType(1, 1.5), params) == 9.0
    assert kernel(SignedType(1, 2.0), SignedType(-1, 1.5), params) == 3.0
    assert kernel(-2.0, -1.0, params) == 6.0
    values = kernel(np.array([1.0, -1.0]), 2.0, params)
    assert np.allclose(values, [6.0, 2.0])


@pytest.mark.parametrize(
    "a, b, law",
    [
        (3.0, 1.0, WeightLaw.uniform([1.0, 2.0])),
        (1.0, 4.0, WeightLaw.uniform([0.5, 1.0, 3.0])),
        (2.0, 0.0, WeightLaw.point_mass(1.5)),
    ],
)
def test_kernel_range_and_symmetry(a, b, law):
    params = ModelParams(a, b, law)
    values = base_type_law(params).values
    table = kernel(values[:, None], values[None, :], params)
    assert np.allclose(table, table.T)
    assert np.all(table >= params.kappa_min)
    assert np.all(table <= params.kappa_max)
    assert np.isclose(table.max(), params.kappa_max)
    assert np.isclose(table.min(), params.kappa_min)


def test_lambda_total():
    law = WeightLaw.uniform([1.0, 3.0])
    params = ModelParams(5.0, 1.0, law)
    mu = base_type_law(params)
    for x in (-3.0, 1.0, 3.0):
        expect = mu.expect(lambda y: kernel(x, y, params))
        assert np.isclose(lambda_total(x, params), expect)


@pytest.mark.parametrize(
    "a, b, law",
    [
        (3.0, 1.0, WeightLaw.point_mass()),
        (5.0, 2.0, WeightLaw.uniform([1.0, 2.0])),
        (2.0, 0.0, WeightLaw.uniform([0.5, 1.0, 4.0])),
    ],
)
def test_offspring_type_law(a, b, law):
    params = ModelParams(a, b, law)
    x = SignedType(1, law.phi_max)
    child = offspring_type_law(x, params)
    assert np.isclose(child.sign_prob(1), a / (a + b))
    marginal = child.weight_marginal()
    assert np.allclose(marginal.values, law.values)
    assert np.allclose(marginal.probs, size_biased(law).probs)


def test_threshold_stat():
    params = ModelParams(5.0, 1.0)
    assert np.isclose(ks_threshold_stat(params), 4.0 / 3.0)
    assert params.detectable
    params = ModelParams(3.0, 2.0)
    assert np.isclose(params.threshold_stat, 0.1)
    assert not params.detectable
    law = WeightLaw.uniform([1.0, 2.0])
    params = ModelParams(4.0, 1.0, law)
    assert np.isclose(params.threshold_stat, 9 * 2.5 / 10)
    assert np.isclose(params.offspring_mean, 6.25)
    assert params.giant_stat == params.offspring_mean


@pytest.mark.parametrize("a, b", [(5.0, 1.0), (3.0, 2.0), (0.0, 2.0)])
def test_threshold_stat_swap(a, b):
    law = WeightLaw.uniform([1.0, 3.0])
    assert np.isclose(
        ks_threshold_stat(ModelParams(a, b, law)),
        ks_threshold_stat(ModelParams(b, a, law)),
    )


@pytest.mark.parametrize("stat", [0.1, 0.5, 0.9, 4.0 / 3.0])
def test_params_from_threshold(stat):
    params = params_from_threshold(stat, 6.0)
    assert np.isclose(params.a + params.b, 6.0)
    assert np.isclose(params.threshold_stat, stat)
    assert params.a >= params.b


def test_params_from_threshold_unreachable():
    with pytest.raises(ValueError):
        params_from_threshold(100.0, 2.0)


def test_json():
    params = ModelParams(2.0, 0.5, WeightLaw.uniform([1.0, 2.0]))
    assert ModelParams.from_json(params.to_json()) == params
    assert ModelParams(1.0, 1.0, [(2.0, 1.0)]).law == WeightLaw.point_mass(2)
