# -*- coding: utf-8 -*-

__all__ = ["write_graph", "read_graph"]

import numpy as np

from ..model.types import parse_spin, spin_symbol
from .sampling import LabeledGraph


def write_graph(graph, path, a, b):
    """Write a graph in the plain text format

    The first line is ``n a b``, followed by one ``id spin weight`` line per
    vertex (spins written as ``+`` or ``-``) and one ``u v`` line per edge.

    Args:
        graph (LabeledGraph): The graph.
        path: The output file name or an open text file.
        a, b (float): The rates recorded in the header.

    """
    lines = ["{0} {1!r} {2!r}".format(graph.n, float(a), float(b))]
    for u, (s, w) in enumerate(zip(graph.spins, graph.weights)):
        lines.append("{0} {1} {2!r}".format(u, spin_symbol(s), float(w)))
    for u, v in graph.edges():
        lines.append("{0} {1}".format(u, v))
    text = "\n".join(lines) + "\n"
    if hasattr(path, "write"):
        path.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def read_graph(path):
    """Read a graph written by :func:`write_graph`

    Returns:
        (LabeledGraph, float, float): The graph and the header rates ``a``
        and ``b``.

    Raises:
        ValueError: If the file is malformed.

    """
    if hasattr(path, "read"):
        text = path.read()
    else:
        with open(path, "r") as f:
            text = f.read()
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 3:
        raise ValueError("expected a header line 'n a b'")
    n = int(rows[0][0])
    a, b = float(rows[0][1]), float(rows[0][2])
    if len(rows) < n + 1:
        raise ValueError("expected {0} vertex lines".format(n))

    spins = np.empty(n, dtype=np.int8)
    weights = np.empty(n)
    seen = np.zeros(n, dtype=bool)
    for row in rows[1 : n + 1]:
        if len(row) != 3:
            raise ValueError("invalid vertex line {0!r}".format(" ".join(row)))
        u = int(row[0])
        if not 0 <= u < n or seen[u]:
            raise ValueError("invalid or repeated vertex id {0}".format(u))
        seen[u] = True
        spins[u] = parse_spin(row[1])
        weights[u] = float(row[2])

    edges = []
    for row in rows[n + 1 :]:
        if len(row) != 2:
            raise ValueError("invalid edge line {0!r}".format(" ".join(row)))
        edges.append((int(row[0]), int(row[1])))
    return LabeledGraph(spins, weights, edges), a, b
