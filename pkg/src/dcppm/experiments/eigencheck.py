# -*- coding: utf-8 -*-

__all__ = [
    "EigencheckResult",
    "expected_matrix",
    "expected_matrix_eigencheck",
]

from dataclasses import asdict, dataclass

import numpy as np

from ..utils import get_rng

MAX_DENSE_VERTICES = 4000


@dataclass(frozen=True)
class EigencheckResult:
    """Leading eigenvalues of the expected adjacency matrix and their limits

    ``cos_psi1`` and ``cos_psi2`` are the absolute cosines between the
    leading eigenvectors and ``psi1(u) ~ phi_u`` and ``psi2(u) ~ phi_u
    sigma_u``.

    """

    n: int
    lambda1: float
    lambda2: float
    theory1: float
    theory2: float
    cos_psi1: float
    cos_psi2: float

    def to_dict(self):
        return asdict(self)


def expected_matrix(spins, weights, params):
    """The expected adjacency matrix given the spins and the weights

    Entry ``(u, v)`` is ``phi_u phi_v a / n`` for equal spins and
    ``phi_u phi_v b / n`` otherwise; the diagonal is zero.

    """
    spins = np.asarray(spins, dtype=float)
    weights = np.asarray(weights, dtype=float)
    n = len(spins)
    rate = np.where(np.outer(spins, spins) > 0, params.a, params.b)
    matrix = np.outer(weights, weights) * rate / n
    np.fill_diagonal(matrix, 0.0)
    return matrix


def _cosine(x, y):
    return float(abs(x @ y) / (np.linalg.norm(x) * np.linalg.norm(y)))


def expected_matrix_eigencheck(n, params, seed=None):
    """Compare the spectrum of the expected matrix with its large-n limit

    Spins and weights are sampled, the expected adjacency matrix is built
    and diagonalized densely, and its two eigenvalues of largest magnitude
    are returned with the limits ``(a + b) / 2 Phi2`` and
    ``(a - b) / 2 Phi2``.

    Args:
        n (int): The number of vertices, at most 4000.
        params (ModelParams): The model.
        seed: The random seed.

    Returns:
        EigencheckResult: The comparison.

    """
    n = int(n)
    if n > MAX_DENSE_VERTICES:
        raise ValueError(
            "the dense eigensolver is limited to {0} vertices".format(
                MAX_DENSE_VERTICES
            )
        )
    if n < 2:
        raise ValueError("n must be at least two")
    rng = get_rng(seed)
    spins = rng.choice(np.array([-1.0, 1.0]), size=n)
    weights = params.law.sample(rng, size=n)
    values, vectors = np.linalg.eigh(expected_matrix(spins, weights, params))
    order = np.argsort(-np.abs(values), kind="stable")[:2]
    m2 = params.law.m2
    return EigencheckResult(
        n=n,
        lambda1=float(values[order[0]]),
        lambda2=float(values[order[1]]),
        theory1=0.5 * (params.a + params.b) * m2,
        theory2=0.5 * (params.a - params.b) * m2,
        cos_psi1=_cosine(vectors[:, order[0]], weights),
        cos_psi2=_cosine(vectors[:, order[1]], weights * spins),
    )
