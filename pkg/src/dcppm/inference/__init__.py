# -*- coding: utf-8 -*-

__all__ = [
    "RootPosterior",
    "tree_root_posterior",
    "tree_root_posterior_bruteforce",
    "estimate_expected_delta",
    "PairwiseFactor",
    "pairwise_factor",
    "pairwise_log_factors",
    "graph_posterior_bruteforce",
    "METHODS",
    "SpinEstimate",
    "spectral_bisection",
    "random_bisection",
    "overlap",
    "pair_agreement_given_estimate",
    "pair_agreement_exact",
]

from .estimators import (
    METHODS,
    SpinEstimate,
    random_bisection,
    spectral_bisection,
)
from .graph_posterior import (
    PairwiseFactor,
    graph_posterior_bruteforce,
    pairwise_factor,
    pairwise_log_factors,
)
from .metrics import (
    overlap,
    pair_agreement_exact,
    pair_agreement_given_estimate,
)
from .tree_posterior import (
    RootPosterior,
    estimate_expected_delta,
    tree_root_posterior,
    tree_root_posterior_bruteforce,
)
