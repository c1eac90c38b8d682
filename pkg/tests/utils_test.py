# -*- coding: utf-8 -*-

import numpy as np

from dcppm.utils import (
    get_progress_bar,
    get_rng,
    parallel_map,
    spawn_seeds,
    stable_seed,
)


def _square(x):
    return x * x


def test_get_rng():
    rng = np.random.default_rng(1)
    assert get_rng(rng) is rng
    assert get_rng(5).random() == get_rng(5).random()
    seq = np.random.SeedSequence(9)
    assert get_rng(seq).random() == np.random.default_rng(9).random()


def test_spawn_seeds():
    a = [np.random.default_rng(s).random() for s in spawn_seeds(3, 4)]
    b = [np.random.default_rng(s).random() for s in spawn_seeds(3, 4)]
    assert a == b
    assert len(set(a)) == 4
    rng = np.random.default_rng(0)
    first = spawn_seeds(rng, 2)
    second = spawn_seeds(rng, 2)
    assert first[0].entropy != second[0].entropy


def test_stable_seed():
    assert stable_seed(1, 2, 3, "x") == stable_seed(1, 2, 3, "x")
    assert stable_seed(1, 2, 3, "x") != stable_seed(1, 2, 3, "y")
    assert 0 <= stable_seed(0) < 2 ** 64


def test_parallel_map():
    items = list(range(20))
    assert parallel_map(_square, items) == [x * x for x in items]
    assert parallel_map(_square, items, n_jobs=2) == [x * x for x in items]


def test_progress_bar():
    assert get_progress_bar(False) is None
    bar = get_progress_bar(True, total=3, disable=True)
    bar.update()
    bar.close()
