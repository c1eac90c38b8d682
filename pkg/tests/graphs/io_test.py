# -*- coding: utf-8 -*-

import io

import numpy as np
import pytest

from dcppm.graphs.io import read_graph, write_graph
from dcppm.graphs.sampling import LabeledGraph, sample_dcppm
from dcppm.model.laws import WeightLaw
from dcppm.model.params import ModelParams


def test_format():
    graph = LabeledGraph([1, -1, 1], [1.0, 2.5, 1.0], [(0, 1), (1, 2)])
    buf = io.StringIO()
    write_graph(graph, buf, 3.0, 1.0)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "3 3.0 1.0"
    assert lines[1:4] == ["0 + 1.0", "1 - 2.5", "2 + 1.0"]
    assert lines[4:] == ["0 1", "1 2"]


def test_round_trip_file(tmp_path, seed=5):
    params = ModelParams(4.0, 1.0, WeightLaw.uniform([1.0, 2.0]))
    graph = sample_dcppm(200, params, seed=seed)
    path = tmp_path / "graph.txt"
    write_graph(graph, str(path), params.a, params.b)
    again, a, b = read_graph(str(path))
    assert (a, b) == (4.0, 1.0)
    assert np.all(again.spins == graph.spins)
    assert np.all(again.weights == graph.weights)
    assert np.all(again.edges() == graph.edges())


def test_numeric_spins():
    text = "2 1.0 0.5\n1 -1 1.0\n0 +1 2.0\n0 1\n"
    graph, a, b = read_graph(io.StringIO(text))
    assert np.all(graph.spins == [1, -1])
    assert np.all(graph.weights == [2.0, 1.0])
    assert graph.num_edges == 1


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2 1.0\n",
        "2 1.0 1.0\n0 + 1.0\n",
        "2 1.0 1.0\n0 + 1.0\n0 - 1.0\n",
        "2 1.0 1.0\n0 + 1.0\n1 - 1.0\n0 1 2\n",
        "2 1.0 1.0\n0 + 1.0\n1 x 1.0\n",
    ],
)
def test_malformed(text):
    with pytest.raises(ValueError):
        read_graph(io.StringIO(text))
