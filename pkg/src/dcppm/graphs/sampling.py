# -*- coding: utf-8 -*-

__all__ = ["LabeledGraph", "sample_dcppm", "DIRECT_SAMPLING_CUTOFF"]

import numpy as np
from scipy import sparse

from ..utils import get_rng, logger

DIRECT_SAMPLING_CUTOFF = 20000


class LabeledGraph:
    """A sparse undirected simple graph with a spin and a weight per vertex

    Args:
        spins: The spin (``+1`` or ``-1``) of every vertex.
        weights: The positive weight of every vertex.
        edges: An ``(m, 2)`` array of vertex pairs. Self-loops and repeated
            pairs are rejected.
        scale (Optional[float]): The ``n`` used in the edge probabilities
            ``kernel / n``. Defaults to the number of vertices; induced
            subgraphs keep the scale of the graph they came from.

    """

    def __init__(self, spins, weights, edges=None, scale=None):
        spins = np.atleast_1d(np.asarray(spins)).astype(np.int8)
        weights = np.atleast_1d(np.asarray(weights, dtype=float))
        n = len(spins)
        if weights.shape != (n,) or n == 0:
            raise ValueError("need one spin and one weight per vertex")
        if not np.all(np.abs(spins) == 1):
            raise ValueError("spins must be +1 or -1")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")

        if edges is None:
            edges = np.zeros((0, 2), dtype=np.int64)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if np.any(edges < 0) or np.any(edges >= n):
            raise ValueError("edge endpoints must be vertex ids")
        if np.any(edges[:, 0] == edges[:, 1]):
            raise ValueError("self-loops are not allowed")
        edges = np.sort(edges, axis=1)
        if len(np.unique(edges, axis=0)) != len(edges):
            raise ValueError("multi-edges are not allowed")

        rows = np.concatenate((edges[:, 0], edges[:, 1]))
        cols = np.concatenate((edges[:, 1], edges[:, 0]))
        adjacency = sparse.csr_matrix(
            (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
        )
        adjacency.sort_indices()

        self._spins = spins
        self._weights = weights
        self._adjacency = adjacency
        self._spins.flags.writeable = False
        self._weights.flags.writeable = False
        self.scale = float(n if scale is None else scale)

    @property
    def n(self):
        return len(self._spins)

    @property
    def spins(self):
        return self._spins

    @property
    def weights(self):
        return self._weights

    @property
    def adjacency(self):
        """The symmetric ``scipy.sparse`` CSR adjacency matrix"""
        return self._adjacency

    @property
    def num_edges(self):
        return self._adjacency.nnz // 2

    def edges(self):
        """The edges as an ``(m, 2)`` array with ``u < v``, sorted"""
        upper = sparse.triu(self._adjacency, k=1).tocoo()
        edges = np.stack((upper.row, upper.col), axis=1).astype(np.int64)
        return edges[np.lexsort((edges[:, 1], edges[:, 0]))]

    def degrees(self):
        return np.diff(self._adjacency.indptr)

    def neighbors(self, u):
        """The neighbours of ``u`` in ascending order"""
        adj = self._adjacency
        return adj.indices[adj.indptr[u] : adj.indptr[u + 1]]

    def has_edge(self, u, v):
        return bool(self._adjacency[u, v])

    def subgraph(self, vertices):
        """The subgraph induced by ``vertices``

        The vertices are renumbered ``0, 1, ...`` in the order given; the
        scale of this graph is kept.

        """
        vertices = np.asarray(vertices, dtype=np.int64)
        sub = self._adjacency[vertices][:, vertices]
        upper = sparse.triu(sub, k=1).tocoo()
        return LabeledGraph(
            self._spins[vertices],
            self._weights[vertices],
            np.stack((upper.row, upper.col), axis=1),
            scale=self.scale,
        )

    def to_networkx(self):
        """Convert to a ``networkx.Graph`` with ``spin`` and ``weight`` data"""
        import networkx as nx

        graph = nx.Graph(scale=self.scale)
        for u in range(self.n):
            graph.add_node(
                u, spin=int(self._spins[u]), weight=float(self._weights[u])
            )
        graph.add_edges_from(self.edges().tolist())
        return graph

    @classmethod
    def from_networkx(cls, graph, spin="spin", weight="weight", scale=None):
        """Build from a ``networkx.Graph`` with integer nodes ``0..n-1``

        Missing ``weight`` attributes default to one.

        """
        nodes = sorted(graph.nodes)
        if nodes != list(range(len(nodes))):
            raise ValueError("graph nodes must be 0, ..., n - 1")
        data = graph.nodes
        spins = [data[u][spin] for u in nodes]
        weights = [data[u].get(weight, 1.0) for u in nodes]
        if scale is None:
            scale = graph.graph.get("scale")
        return cls(spins, weights, list(graph.edges), scale=scale)

    def __repr__(self):
        return "LabeledGraph(n={0}, num_edges={1})".format(
            self.n, self.num_edges
        )


def _sample_direct(spins, weights, params, n, rng):
    rows = []
    cols = []
    for u in range(n - 1):
        others = slice(u + 1, n)
        rate = np.where(spins[others] == spins[u], params.a, params.b)
        prob = weights[u] * weights[others] * rate / n
        hits = np.flatnonzero(rng.random(n - u - 1) < prob) + u + 1
        rows.append(np.full(len(hits), u))
        cols.append(hits)
    if not rows:
        return np.zeros((0, 2), dtype=np.int64)
    return np.stack((np.concatenate(rows), np.concatenate(cols)), axis=1)


def _decode_triangular(index, m):
    """Map ``0 <= k < m (m - 1) / 2`` to the ``k``-th pair ``i < j``"""
    index = np.asarray(index, dtype=np.int64)
    b = 2 * m - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * index)) / 2).astype(np.int64)
    i = np.clip(i, 0, m - 2)

    def offset(row):
        return row * (2 * m - row - 1) // 2

    for _ in range(2):
        i = np.where(offset(i) > index, i - 1, i)
        i = np.where(offset(i + 1) <= index, i + 1, i)
    return i, index - offset(i) + i + 1


def _sample_grouped(spins, atom, params, n, rng):
    law = params.law
    classes = []
    for s in (-1, 1):
        for k in range(law.size):
            members = np.flatnonzero((spins == s) & (atom == k))
            if len(members):
                classes.append((s, law.values[k], members))

    edges = []
    for ci, (s1, w1, m1) in enumerate(classes):
        for s2, w2, m2 in classes[ci:]:
            same_class = m1 is m2
            rate = w1 * w2 * (params.a if s1 == s2 else params.b) / n
            if same_class:
                pairs = len(m1) * (len(m1) - 1) // 2
            else:
                pairs = len(m1) * len(m2)
            if pairs == 0 or rate <= 0:
                continue
            count = rng.binomial(pairs, rate)
            if count == 0:
                continue
            index = rng.choice(pairs, size=count, replace=False)
            if same_class:
                i, j = _decode_triangular(index, len(m1))
                edges.append(np.stack((m1[i], m1[j]), axis=1))
            else:
                edges.append(
                    np.stack((m1[index // len(m2)], m2[index % len(m2)]), 1)
                )
    if not edges:
        return np.zeros((0, 2), dtype=np.int64)
    return np.concatenate(edges)


def sample_dcppm(n, params, seed=None, method="auto"):
    """Sample a degree-corrected planted-partition graph

    Spins are i.i.d. uniform, weights i.i.d. from ``params.law``, and each
    pair ``{u, v}`` independently carries an edge with probability
    ``phi_u phi_v a / n`` (same spin) or ``phi_u phi_v b / n`` (different
    spins).

    Args:
        n (int): The number of vertices.
        params (ModelParams): The model.
        seed: The random seed.
        method (str): ``"direct"`` draws one Bernoulli per pair,
            ``"grouped"`` draws binomial edge counts per pair of
            (spin, weight) classes and places the edges uniformly without
            collision. ``"auto"`` (default) uses ``"direct"`` up to
            ``DIRECT_SAMPLING_CUTOFF`` vertices.

    Returns:
        LabeledGraph: The sampled graph.

    Raises:
        ValueError: If ``n < 1`` or if an edge probability exceeds one
            (``kappa_max > n``).

    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least one")
    if params.kappa_max > n:
        raise ValueError(
            "edge probability {0} exceeds one; increase n".format(
                params.kappa_max / n
            )
        )
    if method == "auto":
        method = "direct" if n <= DIRECT_SAMPLING_CUTOFF else "grouped"
    if method not in ("direct", "grouped"):
        raise ValueError("unknown sampling method {0!r}".format(method))

    rng = get_rng(seed)
    spins = rng.choice(np.array([-1, 1], dtype=np.int8), size=n)
    atom = params.law.sample_index(rng, size=n)
    weights = params.law.values[atom]
    if params.total_rate <= 0:
        edges = None
    elif method == "direct":
        edges = _sample_direct(spins, weights, params, n, rng)
    else:
        edges = _sample_grouped(spins, atom, params, n, rng)
    graph = LabeledGraph(spins, weights, edges)
    logger.debug("sampled %r with method %s", graph, method)
    return graph
