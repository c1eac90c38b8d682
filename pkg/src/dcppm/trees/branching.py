# -*- coding: utf-8 -*-

__all__ = [
    "PopulationOverflow",
    "ROOT_LAWS",
    "sample_tpoi",
    "sample_tpoi_typed",
]

import numpy as np

from ..model.laws import size_biased
from ..model.params import lambda_total, offspring_type_law
from ..model.types import SignedType
from ..utils import get_rng, logger
from .tree import LabeledTree

ROOT_LAWS = ("plain", "size_biased")

DEFAULT_MAX_NODES = 1000000


class PopulationOverflow(RuntimeError):
    """Raised when a sampled tree grows beyond the population cap"""


def _check(depth, root_law):
    depth = int(depth)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if root_law not in ROOT_LAWS:
        raise ValueError(
            "root_law must be one of {0}, got {1!r}".format(
                ROOT_LAWS, root_law
            )
        )
    return depth


def _poisson_mixture_offspring(params):
    """Children as two independent Poisson counts, same and opposite spin"""
    same_rate = 0.5 * params.a * params.law.m1
    flip_rate = 0.5 * params.b * params.law.m1
    child_law = size_biased(params.law)

    def offspring(spin, weight, rng):
        same = rng.poisson(same_rate * weight)
        flip = rng.poisson(flip_rate * weight)
        counts = same + flip
        total = int(counts.sum())
        parent = np.repeat(np.arange(len(spin)), counts)
        starts = np.cumsum(counts) - counts
        rank = np.arange(total) - np.repeat(starts, counts)
        child_spin = spin[parent] * np.where(rank < same[parent], 1, -1)
        return parent, child_spin, child_law.sample(rng, size=total)

    return offspring


def _typed_offspring(params):
    """Children as one Poisson count with i.i.d. types from the type law"""
    if params.total_rate <= 0:
        laws = None
    else:
        laws = {
            s: offspring_type_law(SignedType(s, params.law.phi_min), params)
            for s in (-1, 1)
        }

    def offspring(spin, weight, rng):
        counts = rng.poisson(lambda_total(spin * weight, params))
        total = int(counts.sum())
        parent = np.repeat(np.arange(len(spin)), counts)
        values = np.empty(total)
        for s, law in (laws or {}).items():
            mask = spin[parent] == s
            values[mask] = law.sample(rng, size=int(mask.sum()))
        return parent, np.sign(values).astype(np.int8), np.abs(values)

    return offspring


def _grow(params, depth, root_law, rng, max_nodes, offspring):
    root_weights = params.law
    if root_law == "size_biased":
        root_weights = size_biased(params.law)
    spin = np.array([rng.choice((-1, 1))], dtype=np.int8)
    weight = np.array([root_weights.sample(rng)], dtype=float)
    parents = [np.array([-1])]
    spins = [spin]
    weights = [weight]
    offset = 0
    total = 1
    for _ in range(depth):
        if not len(spin):
            break
        parent, spin, weight = offspring(spin, weight, rng)
        total += len(parent)
        if total > max_nodes:
            raise PopulationOverflow(
                "tree exceeded {0} nodes".format(max_nodes)
            )
        parents.append(parent + offset)
        spins.append(np.asarray(spin, dtype=np.int8))
        weights.append(weight)
        offset += len(spins[-2])
    return LabeledTree(
        np.concatenate(parents), np.concatenate(spins), np.concatenate(weights)
    )


def _sample(params, depth, root_law, seed, max_nodes, max_attempts, offspring):
    rng = get_rng(seed)
    discarded = 0
    while True:
        try:
            tree = _grow(params, depth, root_law, rng, max_nodes, offspring)
        except PopulationOverflow:
            discarded += 1
            logger.warning(
                "discarding tree above the population cap of %d nodes "
                "(%d discarded so far)",
                max_nodes,
                discarded,
            )
            if discarded >= max_attempts:
                raise
            continue
        tree.discarded = discarded
        return tree


def sample_tpoi(
    params,
    depth,
    root_law="plain",
    seed=None,
    max_nodes=DEFAULT_MAX_NODES,
    max_attempts=100,
):
    """Sample the Poisson-mixture branching tree down to a given depth

    The root has a uniform spin and a weight drawn from ``root_law``. A node
    with spin ``s`` and weight ``w`` has ``Poisson(a/2 Phi1 w)`` children of
    spin ``s`` and, independently, ``Poisson(b/2 Phi1 w)`` children of spin
    ``-s``; all non-root weights are i.i.d. from the size-biased law.

    Args:
        params (ModelParams): The model.
        depth (int): The last generation to sample.
        root_law (str): ``"plain"`` (the weight law) or ``"size_biased"``.
        seed: The random seed.
        max_nodes (int): The population cap. A tree above the cap is
            discarded and resampled; the number of discards is stored on the
            result as ``tree.discarded``.
        max_attempts (int): Give up after this many discarded trees.

    Returns:
        LabeledTree: The sampled tree.

    Raises:
        PopulationOverflow: If ``max_attempts`` trees in a row overflowed.

    """
    depth = _check(depth, root_law)
    return _sample(
        params,
        depth,
        root_law,
        seed,
        int(max_nodes),
        int(max_attempts),
        _poisson_mixture_offspring(params),
    )


def sample_tpoi_typed(
    params,
    depth,
    root_law="plain",
    seed=None,
    max_nodes=DEFAULT_MAX_NODES,
    max_attempts=100,
):
    """Sample the same tree through its single-type-law description

    A particle of type ``x`` has ``Poisson(lambda_total(x))`` children whose
    types are i.i.d. from ``offspring_type_law(x)``. The result has the same
    law as :func:`sample_tpoi`.

    Args:
        params (ModelParams): The model.
        depth (int): The last generation to sample.
        root_law (str): ``"plain"`` (default) or ``"size_biased"``.
        seed: The random seed.
        max_nodes (int): The population cap (see :func:`sample_tpoi`).
        max_attempts (int): Give up after this many discarded trees.

    """
    depth = _check(depth, root_law)
    return _sample(
        params,
        depth,
        root_law,
        seed,
        int(max_nodes),
        int(max_attempts),
        _typed_offspring(params),
    )
