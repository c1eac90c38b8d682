# -*- coding: utf-8 -*-

__all__ = ["LabeledNeighborhood", "neighborhood"]

import numpy as np

from ..trees.tree import LabeledTree


class LabeledNeighborhood(LabeledTree):
    """The breadth-first tree of a graph ball, with its graph vertex ids

    Args:
        parent, spin, weight: As for :class:`trees.LabeledTree`.
        vertex_ids: The graph vertex behind every tree node.
        radius (int): The radius of the ball.
        truncated (bool): ``True`` if the ball is not a tree (the explored
            subgraph has a cycle), in which case cycle-closing edges are
            missing from the tree.

    """

    def __init__(
        self,
        parent,
        spin,
        weight,
        vertex_ids,
        radius,
        truncated=False,
        discarded=0,
    ):
        super(LabeledNeighborhood, self).__init__(
            parent, spin, weight, discarded=discarded
        )
        vertex_ids = np.array(vertex_ids, dtype=np.int64)
        if vertex_ids.shape != (self.size,):
            raise ValueError("vertex_ids must have one entry per node")
        vertex_ids.flags.writeable = False
        self._vertex_ids = vertex_ids
        self.radius = int(radius)
        self.truncated = bool(truncated)

    @property
    def vertex_ids(self):
        return self._vertex_ids

    @property
    def root_vertex(self):
        return int(self._vertex_ids[0])

    def with_spins(self, spin):
        return LabeledNeighborhood(
            self.parent,
            spin,
            self.weight,
            self._vertex_ids,
            self.radius,
            truncated=self.truncated,
            discarded=self.discarded,
        )

    def to_dict(self):
        data = super(LabeledNeighborhood, self).to_dict()
        for node, vertex in zip(data["nodes"], self._vertex_ids):
            node["vertex"] = int(vertex)
        data["radius"] = self.radius
        data["truncated"] = self.truncated
        return data

    @classmethod
    def from_dict(cls, data):
        tree = LabeledTree.from_dict(data)
        return cls(
            tree.parent,
            tree.spin,
            tree.weight,
            [node["vertex"] for node in data["nodes"]],
            data["radius"],
            truncated=data.get("truncated", False),
        )

    def __repr__(self):
        return "LabeledNeighborhood(root={0}, size={1}, truncated={2})".format(
            self.root_vertex, self.size, self.truncated
        )


def neighborhood(graph, root, radius):
    """Explore the ball of radius ``radius`` around ``root``

    The ball is explored breadth first. Within a generation the newly found
    vertices are listed in ascending id order and each one is attached to
    the smallest-id vertex of the previous generation that reaches it, so
    the result is deterministic.

    Args:
        graph (LabeledGraph): The graph.
        root (int): The root vertex.
        radius (int): The radius of the ball.

    Returns:
        LabeledNeighborhood: The exploration tree. ``truncated`` is set when
        the ball itself is not a tree.

    """
    root = int(root)
    radius = int(radius)
    if not 0 <= root < graph.n:
        raise ValueError("root must be a vertex of the graph")
    if radius < 0:
        raise ValueError("radius must be nonnegative")

    adjacency = graph.adjacency
    visited = np.zeros(graph.n, dtype=bool)
    visited[root] = True
    vertices = [np.array([root], dtype=np.int64)]
    parents = [np.array([-1], dtype=np.int64)]
    offset = 0
    frontier = vertices[0]
    for _ in range(radius):
        sub = adjacency[frontier].tocoo()
        rows, cols = sub.row, sub.col
        fresh = ~visited[cols]
        rows, cols = rows[fresh], cols[fresh]
        if len(cols) == 0:
            break
        order = np.lexsort((rows, cols))
        found, first = np.unique(cols[order], return_index=True)
        visited[found] = True
        vertices.append(found.astype(np.int64))
        parents.append(offset + rows[order][first].astype(np.int64))
        offset += len(frontier)
        frontier = found.astype(np.int64)

    vertex_ids = np.concatenate(vertices)
    ball_edges = graph.subgraph(vertex_ids).num_edges
    return LabeledNeighborhood(
        np.concatenate(parents),
        graph.spins[vertex_ids],
        graph.weights[vertex_ids],
        vertex_ids,
        radius,
        truncated=ball_edges != len(vertex_ids) - 1,
    )
