# -*- coding: utf-8 -*-

__all__ = ["connected_components", "largest_component_fraction"]

import numpy as np
from scipy.sparse import csgraph


def connected_components(graph):
    """The connected component label of every vertex"""
    _, labels = csgraph.connected_components(graph.adjacency, directed=False)
    return labels


def largest_component_fraction(graph):
    """The fraction of vertices in the largest connected component"""
    labels = connected_components(graph)
    return np.bincount(labels).max() / graph.n
