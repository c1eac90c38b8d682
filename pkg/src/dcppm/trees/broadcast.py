# -*- coding: utf-8 -*-

__all__ = ["BroadcastParams", "broadcast_labels"]

from dataclasses import dataclass

import numpy as np

from ..utils import get_rng


@dataclass(frozen=True)
class BroadcastParams:
    """The flip probability of the broadcast process on a tree"""

    epsilon: float

    def __post_init__(self):
        if not 0 <= self.epsilon < 1:
            raise ValueError("epsilon must be in [0, 1)")

    @classmethod
    def from_params(cls, params):
        """The broadcast process induced by a model, ``epsilon = b/(a+b)``"""
        return cls(params.epsilon)


def broadcast_labels(tree, bp, seed=None):
    """Run the Markov broadcast process on the shape of a tree

    The spins stored on ``tree`` are ignored. The root label is uniform and
    every other node copies its parent's label with probability
    ``1 - epsilon``, independently.

    Args:
        tree (LabeledTree): The tree shape.
        bp: A :class:`BroadcastParams` or the flip probability itself.
        seed: The random seed.

    Returns:
        ndarray: The labels, ``+1`` or ``-1`` per node, in node order.

    """
    if not isinstance(bp, BroadcastParams):
        bp = BroadcastParams(float(bp))
    rng = get_rng(seed)
    labels = np.empty(tree.size, dtype=np.int8)
    labels[0] = rng.choice((-1, 1))
    for depth in range(1, tree.height + 1):
        gen = tree.generation(depth)
        nodes = np.arange(gen.start, gen.stop)
        flips = rng.random(len(nodes)) < bp.epsilon
        labels[nodes] = labels[tree.parent[nodes]] * np.where(flips, -1, 1)
    return labels
