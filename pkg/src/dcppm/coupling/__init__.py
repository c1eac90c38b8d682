# -*- coding: utf-8 -*-

__all__ = [
    "ReservoirLaw",
    "NeighbourLaw",
    "reservoir_law",
    "neighbour_type_law",
    "coupling_constant",
    "coupling_radius",
    "poisson_tv",
    "binomial_poisson_tv",
    "reservoir_tv_bound",
    "neighbour_tv_bound",
    "degree_tv_bound",
    "reservoir_degree_tv",
    "boundary_growth_bound",
    "growth_violations",
    "STATISTICS",
    "CouplingReport",
    "coupling_experiment",
]

from .bounds import (
    binomial_poisson_tv,
    boundary_growth_bound,
    coupling_constant,
    coupling_radius,
    degree_tv_bound,
    growth_violations,
    neighbour_tv_bound,
    poisson_tv,
    reservoir_degree_tv,
    reservoir_tv_bound,
)
from .experiment import STATISTICS, CouplingReport, coupling_experiment
from .reservoir import (
    NeighbourLaw,
    ReservoirLaw,
    neighbour_type_law,
    reservoir_law,
)
