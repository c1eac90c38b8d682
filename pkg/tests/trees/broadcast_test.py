# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.model.params import ModelParams
from dcppm.stats import two_sample_chi2
from dcppm.trees.branching import sample_tpoi
from dcppm.trees.broadcast import BroadcastParams, broadcast_labels
from dcppm.trees.tree import LabeledTree


def _star(k):
    return LabeledTree([-1] + [0] * k, np.ones(k + 1), np.ones(k + 1))


def test_params():
    assert BroadcastParams.from_params(ModelParams(3.0, 1.0)).epsilon == 0.25
    with pytest.raises(ValueError):
        BroadcastParams(1.0)
    with pytest.raises(ValueError):
        BroadcastParams(-0.1)


def test_noiseless():
    tree = sample_tpoi(ModelParams(3.0, 1.0), 4, seed=10)
    labels = broadcast_labels(tree, 0.0, seed=1)
    assert np.all(labels == labels[0])


def test_flip_rate(seed=31):
    tree = _star(20000)
    labels = broadcast_labels(tree, BroadcastParams(0.3), seed=seed)
    flips = np.mean(labels[1:] != labels[0])
    assert abs(flips - 0.3) < 3 * np.sqrt(0.3 * 0.7 / 20000)


def test_root_uniform(seed=32):
    rng = np.random.default_rng(seed)
    tree = _star(1)
    roots = [broadcast_labels(tree, 0.1, seed=rng)[0] for _ in range(4000)]
    assert abs(np.mean(np.array(roots) > 0) - 0.5) < 0.03


def test_matches_tree_spins(seed=33):
    # The spins of the branching tree are a broadcast with b / (a + b)
    params = ModelParams(3.0, 1.0)
    rng = np.random.default_rng(seed)
    same = []
    for _ in range(500):
        tree = sample_tpoi(params, 2, seed=rng)
        child = np.arange(1, tree.size)
        same.append(tree.spin[child] == tree.spin[tree.parent[child]])
    same = np.concatenate(same)
    sigma = np.sqrt(0.75 * 0.25 / len(same))
    assert abs(np.mean(same) - 0.75) < 4 * sigma


def _path_pattern(spin, tree, node):
    parent = tree.parent[node]
    return (spin[0], spin[parent], spin[node])


@pytest.mark.parametrize(
    "params", [ModelParams(3.0, 1.0), ModelParams(1.0, 2.0)]
)
def test_depth_two_patterns(params, seed=34):
    # One uniformly chosen depth-2 node per tree, with the spins on its path
    # to the root, from the tree itself and from a broadcast on its shape
    rng = np.random.default_rng(seed)
    bp = BroadcastParams.from_params(params)
    tree_side = []
    broadcast_side = []
    while len(tree_side) < 3000:
        tree = sample_tpoi(params, 2, seed=rng)
        gen = tree.generation(2)
        if not len(gen):
            continue
        node = int(rng.integers(gen.start, gen.stop))
        labels = broadcast_labels(tree, bp, seed=rng)
        tree_side.append(_path_pattern(tree.spin, tree, node))
        broadcast_side.append(_path_pattern(labels, tree, node))
    assert two_sample_chi2(tree_side, broadcast_side) > 0.001
