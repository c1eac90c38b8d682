# -*- coding: utf-8 -*-

__all__ = [
    "RootPosterior",
    "tree_root_posterior",
    "tree_root_posterior_bruteforce",
    "estimate_expected_delta",
]

from dataclasses import dataclass

import numpy as np
from scipy.special import expit, logsumexp

from ..stats import mean_ci
from ..trees.branching import sample_tpoi
from ..utils import logger, parallel_map, spawn_seeds

MAX_BRUTEFORCE_NODES = 20


@dataclass(frozen=True)
class RootPosterior:
    """The posterior probability that a spin is ``+``

    ``delta`` is the reconstruction advantage ``|2 prob_plus - 1|``.

    """

    prob_plus: float

    @property
    def prob_minus(self):
        return 1 - self.prob_plus

    @property
    def delta(self):
        return abs(2 * self.prob_plus - 1)

    def to_dict(self):
        return {"prob_plus": self.prob_plus, "delta": self.delta}


def _check_observed(tree, depth, observed):
    depth = int(depth)
    if depth < 0:
        raise ValueError("boundary depth must be nonnegative")
    boundary = tree.generation(depth)
    observed = np.atleast_1d(np.asarray(observed)).astype(int)
    if observed.shape != (len(boundary),):
        raise ValueError(
            "expected {0} boundary spins, got {1}".format(
                len(boundary), observed.size
            )
        )
    if not np.all(np.abs(observed) == 1):
        raise ValueError("spins must be +1 or -1")
    return depth, boundary, observed


def _log_channel(epsilon):
    epsilon = float(epsilon)
    if not 0 <= epsilon <= 1:
        raise ValueError("epsilon must be in [0, 1]")
    with np.errstate(divide="ignore"):
        return np.log1p(-epsilon), np.log(epsilon)


def tree_root_posterior(tree, boundary_depth, observed, epsilon):
    """The exact root posterior given the spins at one depth

    Messages are passed from the boundary up to the root in log space. A
    boundary node sends the indicator of its observed spin; every other node
    sends the product over its children of the channel-mixed child messages
    and is renormalized.

    Args:
        tree (LabeledTree): The tree; only its shape is used.
        boundary_depth (int): The depth ``m`` of the observed generation.
        observed: The spins of the nodes at depth ``m``, in node order.
        epsilon (float): The flip probability of the broadcast channel, in
            ``[0, 1]``. Values above ``1/2`` describe a disassortative
            channel and give the same advantage as ``1 - epsilon``.

    Returns:
        RootPosterior: The posterior. An empty boundary gives ``1/2``.

    Raises:
        ValueError: If ``observed`` does not match the boundary or the
            observation has probability zero (possible when
            ``epsilon == 0``).

    """
    depth, boundary, observed = _check_observed(tree, boundary_depth, observed)
    keep, flip = _log_channel(epsilon)
    if len(boundary) == 0:
        return RootPosterior(0.5)

    # Columns hold the log likelihood given spin + and spin -
    message = np.where(observed[:, None] == np.array([1, -1]), 0.0, -np.inf)
    for d in range(depth - 1, -1, -1):
        level = tree.generation(d)
        upward = np.logaddexp(keep + message, flip + message[:, ::-1])
        below = tree.generation(d + 1)
        parent = tree.parent[below.start : below.stop]
        message = np.zeros((len(level), 2))
        np.add.at(message, parent - level.start, upward)
        top = message.max(axis=1, keepdims=True)
        if np.any(np.isneginf(top)):
            raise ValueError("the observation has probability zero")
        message -= top
    return RootPosterior(float(expit(message[0, 0] - message[0, 1])))


def tree_root_posterior_bruteforce(tree, boundary_depth, observed, epsilon):
    """The root posterior by enumerating all spins above the boundary

    A slow reference for :func:`tree_root_posterior`, limited to trees with
    at most 20 nodes above the boundary.

    """
    depth, boundary, observed = _check_observed(tree, boundary_depth, observed)
    keep, flip = _log_channel(epsilon)
    if len(boundary) == 0:
        return RootPosterior(0.5)
    free = boundary.start
    if free > MAX_BRUTEFORCE_NODES:
        raise ValueError("too many nodes to enumerate")

    codes = np.arange(2 ** free)
    bits = (codes[:, None] >> np.arange(free)) & 1
    spins = np.empty((len(codes), boundary.stop), dtype=int)
    spins[:, :free] = 1 - 2 * bits
    spins[:, free:] = observed
    child = np.arange(1, boundary.stop)
    agree = spins[:, child] == spins[:, tree.parent[child]]
    logp = np.where(agree, keep, flip).sum(axis=1)
    total = logsumexp(logp)
    if np.isneginf(total):
        raise ValueError("the observation has probability zero")
    plus = logsumexp(logp[spins[:, 0] == 1])
    return RootPosterior(float(np.exp(plus - total)))


def _delta_trial(args):
    params, m, epsilon, root_law, seed = args
    tree = sample_tpoi(params, m, root_law=root_law, seed=seed)
    boundary = tree.generation(m)
    observed = tree.spin[boundary.start : boundary.stop]
    return tree_root_posterior(tree, m, observed, epsilon).delta


def estimate_expected_delta(
    params,
    m,
    trials,
    seed=None,
    root_law="plain",
    confidence=0.95,
    n_jobs=1,
    progress_bar=False,
):
    """Monte Carlo estimate of the expected reconstruction advantage at depth m

    Each trial samples a branching tree with its spins down to depth ``m``
    and computes the advantage of the exact root posterior given the spins
    at depth ``m``, with flip probability ``b / (a + b)``. Trees that die out
    before depth ``m`` contribute zero.

    Args:
        params (ModelParams): The model.
        m (int): The boundary depth.
        trials (int): The number of trees.
        seed: The master seed.
        root_law (str): The root weight law (see :func:`trees.sample_tpoi`).
        confidence (float): The coverage of the interval.
        n_jobs (int): The number of worker processes.
        progress_bar: Show a progress bar.

    Returns:
        MonteCarloEstimate: The mean advantage with its interval.

    """
    trials = int(trials)
    if trials < 1:
        raise ValueError("trials must be at least one")
    epsilon = params.epsilon if params.total_rate > 0 else 0.5
    logger.info("estimating the advantage at depth %d (%d trees)", m, trials)
    seeds = spawn_seeds(seed, trials)
    deltas = parallel_map(
        _delta_trial,
        [(params, int(m), epsilon, root_law, s) for s in seeds],
        n_jobs=n_jobs,
        progress_bar=progress_bar,
        desc="depth {0}".format(m),
    )
    return mean_ci(deltas, confidence=confidence)
