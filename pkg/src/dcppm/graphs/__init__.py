# -*- coding: utf-8 -*-

__all__ = [
    "LabeledGraph",
    "sample_dcppm",
    "LabeledNeighborhood",
    "neighborhood",
    "connected_components",
    "largest_component_fraction",
    "write_graph",
    "read_graph",
]

from .components import connected_components, largest_component_fraction
from .io import read_graph, write_graph
from .neighborhood import LabeledNeighborhood, neighborhood
from .sampling import LabeledGraph, sample_dcppm
