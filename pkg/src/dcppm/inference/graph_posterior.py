# -*- coding: utf-8 -*-

__all__ = [
    "PairwiseFactor",
    "pairwise_factor",
    "pairwise_log_factors",
    "graph_posterior_bruteforce",
]

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from ..model.types import parse_spin
from ..utils import parallel_map
from .tree_posterior import RootPosterior

MAX_ENUMERATION_VERTICES = 24

# log(0) is replaced by this floor; configurations that use a floored pair
# state are excluded from the enumeration
LOG_FLOOR = -1.0e6


@dataclass(frozen=True)
class PairwiseFactor:
    """The likelihood contribution of one vertex pair

    The four cases are an edge or a non-edge between two vertices whose
    spins agree or disagree.

    """

    edge_agree: float
    edge_disagree: float
    nonedge_agree: float
    nonedge_disagree: float

    def value(self, edge, agree):
        if edge:
            return self.edge_agree if agree else self.edge_disagree
        return self.nonedge_agree if agree else self.nonedge_disagree


def pairwise_factor(phi_u, phi_v, params, n):
    """The pair factor for weights ``phi_u`` and ``phi_v`` at scale ``n``

    Raises:
        ValueError: If an edge probability reaches one.

    """
    same = phi_u * phi_v * params.a / n
    diff = phi_u * phi_v * params.b / n
    if same >= 1 or diff >= 1:
        raise ValueError("edge probability reaches one at n={0}".format(n))
    return PairwiseFactor(same, diff, 1 - same, 1 - diff)


def pairwise_log_factors(graph, params):
    """The log factors of every pair when the spins agree and disagree

    Returns:
        (ndarray, ndarray): Two symmetric ``(n, n)`` arrays with zero
        diagonals, floored at ``LOG_FLOOR``.

    Raises:
        ValueError: If a non-edge factor is not positive.

    """
    phi = graph.weights
    scale = graph.scale
    edge = graph.adjacency.toarray() > 0
    outer = np.outer(phi, phi) / scale
    logs = []
    for rate in (params.a, params.b):
        prob = outer * rate
        if np.any(prob[~edge & ~np.eye(graph.n, dtype=bool)] >= 1):
            raise ValueError(
                "edge probability reaches one at scale {0}".format(scale)
            )
        with np.errstate(divide="ignore"):
            log = np.where(edge, np.log(prob), np.log1p(-np.minimum(prob, 1)))
        log = np.maximum(log, LOG_FLOOR)
        np.fill_diagonal(log, 0.0)
        logs.append(log)
    return logs[0], logs[1]


def _parse_anchors(anchor):
    if anchor is None:
        return {}
    if isinstance(anchor, dict):
        items = anchor.items()
    elif len(anchor) == 2 and np.isscalar(anchor[0]):
        items = [anchor]
    else:
        items = anchor
    return {int(v): parse_spin(s) for v, s in items}


def _violations(spins, forbid_same, forbid_diff):
    """Count the pairs of each configuration sitting in an impossible state"""
    counts = np.zeros(len(spins))
    for forbid, sign in ((forbid_same, 1.0), (forbid_diff, -1.0)):
        pairs = 0.5 * forbid.sum()
        if pairs == 0:
            continue
        q = 0.5 * np.einsum("ij,ij->i", spins @ forbid, spins)
        counts += 0.5 * (pairs + sign * q)
    return np.rint(counts)


def _block_sums(args):
    coupling, forbid_same, forbid_diff, fixed, free, u, start, stop = args
    codes = np.arange(start, stop)
    bits = (codes[:, None] >> np.arange(len(free))) & 1
    spins = np.tile(fixed, (len(codes), 1))
    spins[:, free] = 1 - 2 * bits
    energy = 0.5 * np.einsum("ij,ij->i", spins @ coupling, spins)
    energy[_violations(spins, forbid_same, forbid_diff) > 0] = -np.inf
    plus = energy[spins[:, u] > 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        return logsumexp(energy), logsumexp(plus) if len(plus) else -np.inf


def graph_posterior_bruteforce(
    graph,
    params,
    u,
    anchor=None,
    block_size=65536,
    n_jobs=1,
    max_vertices=MAX_ENUMERATION_VERTICES,
):
    """The exact posterior of one spin by enumerating every configuration

    The likelihood of the graph given the spins and weights is the product
    over all vertex pairs of :func:`pairwise_factor` at the graph scale.
    Every spin configuration consistent with the anchors is enumerated.

    Args:
        graph (LabeledGraph): The graph; its spins are ignored.
        params (ModelParams): The model.
        u (int): The vertex of interest.
        anchor: ``None``, a single ``(vertex, spin)`` pair, a sequence of
            pairs or a ``{vertex: spin}`` mapping of conditioned spins.
        block_size (int): The number of configurations per block.
        n_jobs (int): The number of worker processes over blocks.
        max_vertices (int): The enumeration cap.

    Returns:
        RootPosterior: ``P(sigma_u = + | G, phi, anchors)``.

    Raises:
        ValueError: If the graph is too large, the anchors are invalid or
            every configuration consistent with the anchors has
            probability zero.

    """
    n = graph.n
    if n > max_vertices:
        raise ValueError(
            "enumeration is limited to {0} vertices, got {1}".format(
                max_vertices, n
            )
        )
    u = int(u)
    if not 0 <= u < n:
        raise ValueError("u must be a vertex of the graph")
    anchors = _parse_anchors(anchor)
    if any(not 0 <= v < n for v in anchors):
        raise ValueError("anchors must be vertices of the graph")
    if u in anchors:
        return RootPosterior(1.0 if anchors[u] > 0 else 0.0)

    log_same, log_diff = pairwise_log_factors(graph, params)
    coupling = 0.5 * (log_same - log_diff)
    forbid_same = (log_same <= LOG_FLOOR).astype(float)
    forbid_diff = (log_diff <= LOG_FLOOR).astype(float)
    fixed = np.zeros(n, dtype=float)
    for v, s in anchors.items():
        fixed[v] = s
    free = np.array([v for v in range(n) if v not in anchors], dtype=int)

    total = 2 ** len(free)
    blocks = [
        (
            coupling,
            forbid_same,
            forbid_diff,
            fixed,
            free,
            u,
            start,
            min(start + block_size, total),
        )
        for start in range(0, total, int(block_size))
    ]
    sums = np.array(parallel_map(_block_sums, blocks, n_jobs=n_jobs))
    with np.errstate(divide="ignore", invalid="ignore"):
        log_total = logsumexp(sums[:, 0])
        log_plus = logsumexp(sums[:, 1])
    if np.isneginf(log_total):
        raise ValueError("the graph has probability zero given the anchors")
    return RootPosterior(float(np.exp(log_plus - log_total)))
