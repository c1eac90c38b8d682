# -*- coding: utf-8 -*-

__all__ = [
    "LabeledTree",
    "PopulationOverflow",
    "ROOT_LAWS",
    "sample_tpoi",
    "sample_tpoi_typed",
    "BroadcastParams",
    "broadcast_labels",
]

from .branching import (
    ROOT_LAWS,
    PopulationOverflow,
    sample_tpoi,
    sample_tpoi_typed,
)
from .broadcast import BroadcastParams, broadcast_labels
from .tree import LabeledTree
