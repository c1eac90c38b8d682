# -*- coding: utf-8 -*-

__all__ = ["METHODS", "SpinEstimate", "spectral_bisection", "random_bisection"]

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from ..utils import get_rng, logger

METHODS = ("adjacency", "nonbacktracking")


@dataclass(frozen=True, eq=False)
class SpinEstimate:
    """An estimated spin assignment

    Attributes:
        assignment: The estimated spins (``+1`` or ``-1``).
        bisection (bool): ``True`` when exactly ``n // 2`` spins are ``+``.
        method (str): The estimator that produced it.
        degenerate (bool): ``True`` when the spectrum carried no usable
            second eigenvector and a random bisection was returned instead.
        eigenvalues (tuple): The two leading eigenvalues, if computed.

    """

    assignment: np.ndarray
    bisection: bool = True
    method: str = "random"
    degenerate: bool = False
    eigenvalues: tuple = field(default=())

    def __post_init__(self):
        assignment = np.array(self.assignment, dtype=np.int8)
        if not np.all(np.abs(assignment) == 1):
            raise ValueError("spins must be +1 or -1")
        if self.bisection and np.sum(assignment > 0) != len(assignment) // 2:
            raise ValueError("a bisection has exactly n // 2 positive spins")
        assignment.flags.writeable = False
        object.__setattr__(self, "assignment", assignment)

    def __len__(self):
        return len(self.assignment)

    def to_dict(self):
        return {
            "assignment": self.assignment.tolist(),
            "bisection": self.bisection,
            "method": self.method,
            "degenerate": self.degenerate,
            "eigenvalues": [float(v) for v in self.eigenvalues],
        }


def _split(scores):
    n = len(scores)
    order = np.argsort(-scores, kind="stable")
    assignment = -np.ones(n, dtype=np.int8)
    assignment[order[: n // 2]] = 1
    return assignment


def random_bisection(n, seed=None):
    """A uniformly random assignment with ``n // 2`` positive spins"""
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least one")
    rng = get_rng(seed)
    return SpinEstimate(_split(rng.permutation(n).astype(float)))


def _operator(graph, method):
    adjacency = graph.adjacency.astype(float)
    n = graph.n
    if method == "adjacency":
        # Shift so that the top of the spectrum dominates in magnitude
        shift = float(graph.degrees().max())
        return adjacency + shift * sparse.identity(n, format="csr"), shift
    degree = sparse.diags(graph.degrees().astype(float))
    identity = sparse.identity(n, format="csr")
    operator = sparse.bmat(
        [[adjacency, identity - degree], [identity, None]], format="csr"
    )
    return operator, 0.0


def _leading_pair(operator, rng, max_iter, tol):
    size = operator.shape[0]
    basis, _ = np.linalg.qr(rng.standard_normal((size, 2)))
    for it in range(max_iter):
        image = operator @ basis
        ritz = basis.T @ image
        residual = np.linalg.norm(image - basis @ ritz)
        scale = max(np.linalg.norm(image), 1e-300)
        basis, _ = np.linalg.qr(image)
        if residual <= tol * scale:
            break
    else:
        logger.warning(
            "power iteration did not converge in %d iterations", max_iter
        )
    image = operator @ basis
    values, vectors = np.linalg.eig(basis.T @ image)
    order = np.argsort(-np.abs(values), kind="stable")
    values = np.real(values[order])
    vectors = np.real(basis @ vectors[:, order])
    return values, vectors, basis


def spectral_bisection(
    graph, method="adjacency", seed=None, max_iter=2000, tol=1e-8
):
    """Split the vertices by the second eigenvector of a graph operator

    Args:
        graph (LabeledGraph): The graph, at least two vertices.
        method (str): ``"adjacency"`` or ``"nonbacktracking"``. The
            non-backtracking spectrum is computed through the ``2n x 2n``
            matrix ``[[A, I - D], [I, 0]]``, which shares its nontrivial
            eigenvalues with the edge non-backtracking matrix; the first
            ``n`` coordinates of its eigenvector are used.
        seed: The seed for the initial vectors and for the fallback.
        max_iter (int): The maximum number of power iterations.
        tol (float): The relative residual at convergence.

    Returns:
        SpinEstimate: ``+`` on the ``n // 2`` largest coordinates. When the
        graph has no edges or the second eigenvalue vanishes a random
        bisection flagged ``degenerate`` is returned.

    """
    if method not in METHODS:
        raise ValueError("unknown method {0!r}".format(method))
    n = graph.n
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = get_rng(seed)
    if graph.num_edges == 0:
        logger.warning("graph without edges; returning a random bisection")
        estimate = random_bisection(n, seed=rng)
        return SpinEstimate(
            estimate.assignment, method=method, degenerate=True
        )

    operator, shift = _operator(graph, method)
    values, vectors, basis = _leading_pair(operator, rng, max_iter, tol)
    values = values - shift
    if abs(values[1]) <= tol * max(abs(values[0]), 1.0):
        logger.warning("vanishing second eigenvalue; random bisection")
        estimate = random_bisection(n, seed=rng)
        return SpinEstimate(
            estimate.assignment,
            method=method,
            degenerate=True,
            eigenvalues=tuple(values),
        )

    if abs(values[0] - values[1]) <= np.sqrt(tol) * abs(values[0]):
        # Tied pair: take the direction of the span orthogonal to ones
        totals = basis[:n].sum(axis=0)
        if np.linalg.norm(totals) > 0:
            scores = basis[:n] @ np.array([totals[1], -totals[0]])
        else:
            scores = basis[:n, 1]
    else:
        scores = vectors[:n, 1]
    return SpinEstimate(
        _split(scores), method=method, eigenvalues=tuple(values)
    )
