# -*- coding: utf-8 -*-

__all__ = [
    "__version__",
    "model",
    "graphs",
    "trees",
    "coupling",
    "inference",
    "experiments",
]

from . import coupling, experiments, graphs, inference, model, trees
from .coupling import *  # NOQA
from .experiments import *  # NOQA
from .graphs import *  # NOQA
from .inference import *  # NOQA
from .model import *  # NOQA
from .stats import *  # NOQA
from .trees import *  # NOQA

try:
    from .dcppm_version import __version__
except ImportError:  # pragma: no cover
    __version__ = "0.1.0"

__uri__ = "https://github.com/dcppm/dcppm"
__author__ = "The dcppm developers"
__email__ = "dcppm@users.noreply.github.com"
__license__ = "MIT"
__description__ = "Degree-corrected planted partition simulation and inference"
