# -*- coding: utf-8 -*-

import numpy as np
import pytest
from scipy import stats

from dcppm.model.laws import WeightLaw, size_biased
from dcppm.model.params import ModelParams
from dcppm.stats import two_sample_chi2
from dcppm.trees.branching import (
    PopulationOverflow,
    sample_tpoi,
    sample_tpoi_typed,
)

PARAMS = [
    ModelParams(3.0, 1.0),
    ModelParams(2.0, 2.0, WeightLaw.uniform([1.0, 2.0])),
    ModelParams(4.0, 0.5, [(0.5, 0.3), (1.0, 0.5), (3.0, 0.2)]),
]


def test_depth_zero():
    tree = sample_tpoi(ModelParams(3.0, 1.0), 0, seed=1)
    assert tree.size == 1
    assert tree.spin[0] in (-1, 1)


def test_empty_model():
    for sampler in (sample_tpoi, sample_tpoi_typed):
        tree = sampler(ModelParams(0.0, 0.0), 5, seed=2)
        assert tree.size == 1


def test_reproducible():
    params = PARAMS[1]
    t1 = sample_tpoi(params, 4, seed=123)
    t2 = sample_tpoi(params, 4, seed=123)
    assert np.all(t1.parent == t2.parent)
    assert np.all(t1.spin == t2.spin)
    assert np.all(t1.weight == t2.weight)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        sample_tpoi(PARAMS[0], -1)
    with pytest.raises(ValueError):
        sample_tpoi(PARAMS[0], 2, root_law="other")


def test_weights_are_atoms(seed=11):
    params = PARAMS[2]
    tree = sample_tpoi(params, 3, seed=seed)
    params.law.atom_index(tree.weight)


def test_population_cap(seed=5):
    params = ModelParams(20.0, 20.0)
    with pytest.raises(PopulationOverflow):
        sample_tpoi(params, 5, seed=seed, max_nodes=100, max_attempts=3)


def test_population_cap_discards(seed=8):
    params = ModelParams(2.0, 1.0)
    tree = sample_tpoi(params, 3, seed=seed, max_nodes=3, max_attempts=1000)
    assert tree.size <= 3
    assert tree.discarded >= 0


def _depth_one(sampler, params, count, seed):
    rng = np.random.default_rng(seed)
    rows = []
    weights = []
    for _ in range(count):
        tree = sampler(params, 1, seed=rng)
        kids = np.arange(1, tree.size)
        same = int(np.sum(tree.spin[kids] == tree.spin[0]))
        rows.append((min(len(kids), 10), min(same, 10)))
        weights.append(params.law.atom_index(tree.weight[kids]))
    return np.array(rows), np.concatenate(weights)


@pytest.mark.parametrize("params", PARAMS)
def test_samplers_agree(params, seed=2020):
    x, wx = _depth_one(sample_tpoi, params, 4000, seed)
    y, wy = _depth_one(sample_tpoi_typed, params, 4000, seed + 1)
    assert two_sample_chi2(x, y) > 0.001
    assert two_sample_chi2(wx, wy) > 0.001


@pytest.mark.parametrize("params", PARAMS)
def test_offspring_mean(params, seed=77):
    rng = np.random.default_rng(seed)
    counts = []
    for _ in range(1500):
        tree = sample_tpoi(params, 2, seed=rng)
        gen = tree.generation(1)
        counts.append(tree.num_children()[gen.start : gen.stop])
    counts = np.concatenate(counts)
    sigma = np.std(counts) / np.sqrt(len(counts))
    assert abs(np.mean(counts) - params.offspring_mean) < 3 * sigma


@pytest.mark.parametrize("params", PARAMS)
def test_child_weights_are_size_biased(params, seed=99):
    rng = np.random.default_rng(seed)
    atoms = []
    for _ in range(2000):
        tree = sample_tpoi(params, 1, seed=rng)
        atoms.append(params.law.atom_index(tree.weight[1:]))
    atoms = np.concatenate(atoms)
    law = size_biased(params.law)
    if law.size == 1:
        return
    counts = np.bincount(atoms, minlength=law.size)
    assert stats.chisquare(counts, counts.sum() * law.probs).pvalue > 0.001


def test_size_biased_root(seed=3):
    params = ModelParams(1.0, 1.0, WeightLaw.uniform([1.0, 3.0]))
    rng = np.random.default_rng(seed)
    roots = [
        sample_tpoi(params, 0, root_law="size_biased", seed=rng).weight[0]
        for _ in range(4000)
    ]
    assert abs(np.mean(np.array(roots) == 3.0) - 0.75) < 0.03


def _depth_one_joint(sampler, params, count, seed):
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(count):
        tree = sampler(params, 1, seed=rng)
        kids = np.arange(1, tree.size)
        same = int(np.sum(tree.spin[kids] == tree.spin[0]))
        atom = -1
        if len(kids):
            atom = int(params.law.atom_index(tree.weight[rng.choice(kids)]))
        rows.append((min(len(kids), 10), min(same, 10), atom))
    return np.array(rows)


@pytest.mark.parametrize("params", PARAMS)
def test_samplers_agree_jointly(params, seed=2021):
    x = _depth_one_joint(sample_tpoi, params, 4000, seed)
    y = _depth_one_joint(sample_tpoi_typed, params, 4000, seed + 1)
    assert two_sample_chi2(x, y) > 0.001


@pytest.mark.parametrize(
    "params",
    [
        ModelParams(3.0, 1.0),
        ModelParams(1.5, 0.5, WeightLaw.uniform([1.0, 2.0])),
    ],
)
def test_generation_growth(params, seed=78):
    rng = np.random.default_rng(seed)
    sizes = np.array(
        [
            sample_tpoi(params, 4, seed=rng).generation_sizes(4)
            for _ in range(3000)
        ]
    )
    first = 0.5 * params.total_rate * params.law.m1 ** 2
    for t in range(1, 5):
        expect = params.offspring_mean ** (t - 1) * first
        sigma = np.std(sizes[:, t]) / np.sqrt(len(sizes))
        assert abs(np.mean(sizes[:, t]) - expect) < 4 * sigma


@pytest.mark.parametrize("sampler", [sample_tpoi, sample_tpoi_typed])
def test_weight_independent_of_spins(sampler, seed=79):
    params = PARAMS[2]
    rng = np.random.default_rng(seed)
    table = np.zeros((4, params.law.size))
    for _ in range(400):
        tree = sampler(params, 2, seed=rng)
        node = np.arange(1, tree.size)
        pattern = 2 * (tree.spin[node] > 0) + (
            tree.spin[node] == tree.spin[tree.parent[node]]
        )
        atoms = params.law.atom_index(tree.weight[node])
        np.add.at(table, (pattern, atoms), 1)
    table = table[table.sum(axis=1) > 0][:, table.sum(axis=0) > 0]
    assert stats.chi2_contingency(table)[1] > 0.001


def test_survival(seed=80):
    rng = np.random.default_rng(seed)
    super_params = ModelParams(3.0, 1.0)
    sub_params = ModelParams(0.6, 0.6)
    assert super_params.offspring_mean > 1 > sub_params.offspring_mean
    alive = [
        sample_tpoi(super_params, 12, seed=rng).survives(12)
        for _ in range(200)
    ]
    assert np.mean(alive) > 0.5
    alive = [
        sample_tpoi(sub_params, 12, seed=rng).survives(12)
        for _ in range(2000)
    ]
    assert np.mean(alive) < 0.02
