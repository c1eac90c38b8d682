# -*- coding: utf-8 -*-

import numpy as np
import pytest

from dcppm.trees.tree import LabeledTree


def _example():
    # 0 -> 1, 2; 1 -> 3, 4; 2 -> 5; 5 -> 6
    return LabeledTree(
        [-1, 0, 0, 1, 1, 2, 5],
        [1, 1, -1, 1, -1, -1, 1],
        [1.0, 2.0, 1.0, 1.0, 2.0, 1.0, 1.0],
    )


def test_shape():
    tree = _example()
    assert tree.size == len(tree) == 7
    assert tree.height == 3
    assert np.all(tree.depth == [0, 1, 1, 2, 2, 2, 3])
    assert tree.generation(1) == range(1, 3)
    assert tree.generation(2) == range(3, 6)
    assert len(tree.generation(7)) == 0
    assert np.all(tree.generation_sizes() == [1, 2, 3, 1])
    assert np.all(tree.generation_sizes(5) == [1, 2, 3, 1, 0, 0])
    assert np.all(tree.num_children() == [2, 2, 1, 0, 0, 1, 0])
    assert np.all(tree.children(1) == [3, 4])
    assert tree.survives(3)
    assert not tree.survives(4)


def test_long_path():
    size = 200000
    tree = LabeledTree(np.arange(size) - 1, np.ones(size), np.ones(size))
    assert tree.height == size - 1
    assert np.all(tree.depth == np.arange(size))
    assert len(tree.generation(size - 1)) == 1


def test_depths_match_parents(seed=8):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        sizes = rng.integers(1, 6, size=int(rng.integers(1, 30)))
        parent = [-1]
        start, stop = 0, 1
        for count in sizes:
            parent.extend(np.sort(rng.integers(start, stop, size=count)))
            start, stop = stop, stop + count
        tree = LabeledTree(parent, np.ones(stop), np.ones(stop))
        depth = np.zeros(stop, dtype=int)
        for node in range(1, stop):
            depth[node] = depth[parent[node]] + 1
        assert np.all(tree.depth == depth)
        assert np.all(tree.generation_sizes()[1:] == sizes)


@pytest.mark.parametrize(
    "parent",
    [
        [0, 0],
        [-1, 1],
        [-1, 0, 2],
        # depths out of order: 0, 1, 2, 1
        [-1, 0, 1, 0],
    ],
)
def test_invalid_shape(parent):
    with pytest.raises(ValueError):
        LabeledTree(parent, np.ones(len(parent)), np.ones(len(parent)))


def test_invalid_labels():
    with pytest.raises(ValueError):
        LabeledTree([-1, 0], [1, 0], [1.0, 1.0])
    with pytest.raises(ValueError):
        LabeledTree([-1, 0], [1, 1], [1.0, -1.0])
    with pytest.raises(ValueError):
        LabeledTree([-1, 0], [1], [1.0, 1.0])


def test_read_only():
    tree = _example()
    with pytest.raises(ValueError):
        tree.spin[0] = -1


def test_truncate():
    tree = _example().truncate(1)
    assert tree.size == 3
    assert tree.height == 1
    assert _example().truncate(10).size == 7


def test_with_spins():
    tree = _example()
    flipped = tree.with_spins(-tree.spin)
    assert np.all(flipped.spin == -tree.spin)
    assert np.all(flipped.parent == tree.parent)


def test_json():
    tree = _example()
    data = tree.to_dict()
    assert data["nodes"][0] == {"parent": None, "spin": "+", "weight": 1.0}
    again = LabeledTree.from_json(tree.to_json())
    assert np.all(again.parent == tree.parent)
    assert np.all(again.spin == tree.spin)
    assert np.allclose(again.weight, tree.weight)
