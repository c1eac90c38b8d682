# -*- coding: utf-8 -*-

__all__ = ["LabeledTree"]

import json

import numpy as np

from ..model.types import parse_spin, spin_symbol


def _readonly(array, dtype):
    array = np.array(array, dtype=dtype)
    array.flags.writeable = False
    return array


def _depths(parent):
    """Node depths by pointer jumping

    ``dist[i]`` is the distance from ``i`` to its ancestor ``jump[i]``; both
    double each round until every jump reaches the root.

    """
    jump = parent.copy()
    jump[0] = 0
    dist = np.ones(len(parent), dtype=np.int64)
    dist[0] = 0
    while np.any(jump):
        dist += dist[jump]
        jump = jump[jump]
    return dist


class LabeledTree:
    """A rooted tree with a spin and a weight on every node

    Nodes are stored in breadth-first, generation-major order: the root is
    node ``0``, every parent comes before its children and the depths are
    nondecreasing, so each generation is a contiguous range of node ids.

    Args:
        parent: The parent of every node, ``-1`` for the root.
        spin: The spin (``+1`` or ``-1``) of every node.
        weight: The positive weight of every node.
        discarded (int): The number of samples thrown away (population cap)
            before this one was accepted.

    """

    def __init__(self, parent, spin, weight, discarded=0):
        parent = np.atleast_1d(np.asarray(parent, dtype=np.int64))
        size = len(parent)
        if size == 0 or parent[0] != -1:
            raise ValueError("node 0 must be the root")
        if np.any(parent[1:] < 0) or np.any(parent[1:] >= np.arange(1, size)):
            raise ValueError("parents must precede their children")
        depth = _depths(parent)
        if np.any(np.diff(depth) < 0):
            raise ValueError("nodes must be in generation-major order")
        spin = np.atleast_1d(np.asarray(spin))
        weight = np.atleast_1d(np.asarray(weight, dtype=float))
        if spin.shape != (size,) or weight.shape != (size,):
            raise ValueError("spin and weight must have one entry per node")
        if not np.all(np.abs(spin) == 1):
            raise ValueError("spins must be +1 or -1")
        if np.any(weight <= 0):
            raise ValueError("weights must be positive")

        self._parent = _readonly(parent, np.int64)
        self._depth = _readonly(depth, np.int64)
        self._spin = _readonly(spin, np.int8)
        self._weight = _readonly(weight, float)
        self._offsets = np.searchsorted(depth, np.arange(depth[-1] + 2))
        self.discarded = int(discarded)

    @property
    def size(self):
        return len(self._parent)

    def __len__(self):
        return self.size

    @property
    def parent(self):
        return self._parent

    @property
    def depth(self):
        return self._depth

    @property
    def spin(self):
        return self._spin

    @property
    def weight(self):
        return self._weight

    @property
    def height(self):
        """The depth of the deepest node"""
        return int(self._depth[-1])

    def generation(self, depth):
        """The range of node ids at a given depth (empty beyond the height)"""
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        if depth > self.height:
            return range(self.size, self.size)
        return range(int(self._offsets[depth]), int(self._offsets[depth + 1]))

    def generation_sizes(self, max_depth=None):
        """The number of nodes at each depth ``0, ..., max_depth``"""
        if max_depth is None:
            max_depth = self.height
        sizes = np.bincount(self._depth, minlength=max_depth + 1)
        return sizes[: max_depth + 1]

    def survives(self, depth):
        """Does the tree have at least one node at ``depth``?"""
        return len(self.generation(depth)) > 0

    def num_children(self):
        return np.bincount(self._parent[1:], minlength=self.size)

    def children(self, node):
        return np.flatnonzero(self._parent == node)

    def with_spins(self, spin):
        """A copy of the tree with its spins replaced"""
        return type(self)(self._parent, spin, self._weight, self.discarded)

    def truncate(self, depth):
        """The subtree of all nodes at depth at most ``depth``"""
        stop = self.size if depth >= self.height else self._offsets[depth + 1]
        return LabeledTree(
            self._parent[:stop],
            self._spin[:stop],
            self._weight[:stop],
            self.discarded,
        )

    def to_dict(self):
        return {
            "nodes": [
                {
                    "parent": None if p < 0 else int(p),
                    "spin": spin_symbol(s),
                    "weight": float(w),
                }
                for p, s, w in zip(self._parent, self._spin, self._weight)
            ]
        }

    @classmethod
    def from_dict(cls, data):
        nodes = data["nodes"]
        parent = [-1 if n["parent"] is None else n["parent"] for n in nodes]
        spin = [parse_spin(n["spin"]) for n in nodes]
        weight = [n["weight"] for n in nodes]
        return cls(parent, spin, weight)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return "{0}(size={1}, height={2})".format(
            type(self).__name__, self.size, self.height
        )
