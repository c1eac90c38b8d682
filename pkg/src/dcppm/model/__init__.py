# -*- coding: utf-8 -*-

__all__ = [
    "WeightLaw",
    "make_weight_law",
    "parse_weight_law",
    "size_biased",
    "discretize_law",
    "SignedType",
    "TypeLaw",
    "make_type_law",
    "signed_law",
    "parse_spin",
    "spin_symbol",
    "ModelParams",
    "kernel",
    "kernel_values",
    "lambda_total",
    "base_type_law",
    "tilted_law",
    "offspring_type_law",
    "ks_threshold_stat",
    "params_from_threshold",
]

from .laws import (
    WeightLaw,
    discretize_law,
    make_weight_law,
    parse_weight_law,
    size_biased,
)
from .params import (
    ModelParams,
    base_type_law,
    kernel,
    kernel_values,
    ks_threshold_stat,
    lambda_total,
    offspring_type_law,
    params_from_threshold,
    tilted_law,
)
from .types import (
    SignedType,
    TypeLaw,
    make_type_law,
    parse_spin,
    signed_law,
    spin_symbol,
)
