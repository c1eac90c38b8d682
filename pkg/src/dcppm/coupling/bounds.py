# -*- coding: utf-8 -*-

__all__ = [
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
]

import numpy as np
from scipy import stats

from ..model.params import _value, kernel_values, lambda_total


def coupling_constant(params):
    """The largest admissible constant ``C`` in the radius ``C log n``

    This is ``(1 - log(4 / e)) / (3 log(2 kappa_max))``.

    Raises:
        ValueError: If ``2 kappa_max <= 1``.

    """
    growth = 2 * params.kappa_max
    if growth <= 1:
        raise ValueError(
            "the coupling radius needs 2 kappa_max > 1, got {0}".format(growth)
        )
    return (1 - np.log(4 / np.e)) / (3 * np.log(growth))


def coupling_radius(n, params, safety=1.0):
    """The certified coupling radius ``floor(safety C log n)``

    Args:
        n (int): The number of vertices, at least two.
        params (ModelParams): The model.
        safety (float): A factor in ``(0, 1]`` applied to the constant.

    Raises:
        ValueError: If ``n < 2``, ``safety`` is out of range or
            ``2 kappa_max <= 1``.

    """
    if n < 2:
        raise ValueError("n must be at least two")
    if not 0 < safety <= 1:
        raise ValueError("safety must be in (0, 1]")
    radius = safety * coupling_constant(params) * np.log(n)
    return max(int(np.floor(radius)), 0)


def _support(*means):
    top = max(means)
    return np.arange(int(stats.poisson.isf(1e-17, top)) + 10 if top else 2)


def poisson_tv(mu, lam):
    """The total variation distance between ``Poi(mu)`` and ``Poi(lam)``"""
    if mu < 0 or lam < 0:
        raise ValueError("poisson means must be nonnegative")
    k = _support(mu, lam)
    p = stats.poisson.pmf(k, mu)
    q = stats.poisson.pmf(k, lam)
    tail = abs(p.sum() - q.sum())
    return float(0.5 * (np.abs(p - q).sum() + tail))


def binomial_poisson_tv(trials, lam):
    """The distance between ``Binomial(trials, lam / trials)`` and ``Poi(lam)``

    Raises:
        ValueError: If ``lam > trials``.

    """
    trials = int(trials)
    if trials < 1 or not 0 <= lam <= trials:
        raise ValueError("need trials >= 1 and 0 <= lam <= trials")
    return _binomial_poisson_tv(trials, lam / trials, lam)


def _binomial_poisson_tv(trials, p, lam):
    k = _support(trials * p, lam)
    p_bin = stats.binom.pmf(k, trials, p)
    q = stats.poisson.pmf(k, lam)
    tail = abs(p_bin.sum() - q.sum())
    return float(0.5 * (np.abs(p_bin - q).sum() + tail))


def reservoir_tv_bound(m, n, params):
    """The bound ``2 kappa_max m / n`` on the reservoir law distance"""
    return 2 * params.kappa_max * m / n


def neighbour_tv_bound(m, n, params):
    """The bound ``4 kappa_max^3 / kappa_min^2 m / n`` on the neighbour law

    Infinite when ``kappa_min == 0``.

    """
    if params.kappa_min <= 0:
        return np.inf
    return 4 * params.kappa_max ** 3 / params.kappa_min ** 2 * m / n


def degree_tv_bound(reservoir_size, m, n, params):
    """The bound on the distance between a fresh degree and ``Poi(lambda_x)``

    ``kappa_max (n - reservoir_size) / n + 3 kappa_max^2 m / n``, up to the
    Poisson continuity constant (taken as one). With ``m = 0`` the bound
    vanishes and does not cover the binomial to Poisson error
    ``kappa_max^2 / n``, so it is only meaningful once ``m >= 1``.

    """
    kmax = params.kappa_max
    return kmax * abs(n - reservoir_size) / n + 3 * kmax ** 2 * m / n


def reservoir_degree_tv(x, reservoir, reservoir_size):
    """The exact distance between a fresh degree and ``Poi(lambda_x)``

    The number of new neighbours of ``x`` among ``reservoir_size`` reservoir
    vertices is ``Binomial(reservoir_size, p)`` with ``p`` the mean kernel
    against the reservoir law divided by ``n``.

    """
    value = _value(x)
    p = np.sum(
        kernel_values(value, reservoir.values, reservoir.params)
        * reservoir.probs
    )
    p /= reservoir.n
    return _binomial_poisson_tv(
        int(reservoir_size), p, lambda_total(value, reservoir.params)
    )


def boundary_growth_bound(s, n, params):
    """The growth envelope ``2^s kappa_max^s log n`` of generation ``s``"""
    return (2 * params.kappa_max) ** s * np.log(n)


def growth_violations(tree, n, params):
    """The depths at which a tree exceeds :func:`boundary_growth_bound`"""
    sizes = tree.generation_sizes()
    depths = np.arange(len(sizes))
    bound = boundary_growth_bound(depths, n, params)
    return depths[sizes > bound].tolist()
