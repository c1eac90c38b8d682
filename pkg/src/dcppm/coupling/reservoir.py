# -*- coding: utf-8 -*-

__all__ = [
    "ReservoirLaw",
    "NeighbourLaw",
    "reservoir_law",
    "neighbour_type_law",
]

import numpy as np

from ..model.params import (
    _value,
    base_type_law,
    kernel_values,
    offspring_type_law,
)
from ..model.types import SignedType, TypeLaw


class ReservoirLaw(TypeLaw):
    """The type law of a vertex that is still unexplored

    After ``m`` vertices of types ``x_1, ..., x_m`` have been explored, a
    vertex that is adjacent to none of them has type law proportional to
    ``g(y) mu(y)`` with ``g(y) = prod_i (1 - kernel(x_i, y) / n)``.

    Args:
        values, probs: The reweighted atoms.
        base (TypeLaw): The type law ``mu``.
        explored: The signed values of the explored types.
        n (int): The population size.
        params (ModelParams): The model.

    """

    def __init__(self, values, probs, base, explored, n, params):
        super(ReservoirLaw, self).__init__(values, probs)
        self.base = base
        self.explored = np.array(explored, dtype=float)
        self.n = int(n)
        self.params = params

    @property
    def m(self):
        return len(self.explored)

    def log_g(self, y):
        """The log of the avoidance factor ``g`` at the signed values ``y``"""
        y = np.atleast_1d(np.asarray(_value(y), dtype=float))
        ratio = kernel_values(self.explored[:, None], y[None, :], self.params)
        return np.log1p(-ratio / self.n).sum(axis=0)

    def g(self, y):
        return np.exp(self.log_g(y))

    def tv_to_base(self):
        """The exact total variation distance to ``mu``"""
        return self.tv(self.base)


class NeighbourLaw(TypeLaw):
    """The type law of a new neighbour of ``x`` drawn from the reservoir

    Args:
        values, probs: The atoms.
        x (SignedType): The type of the vertex being explored.
        reservoir (ReservoirLaw): The reservoir the neighbour comes from.

    """

    def __init__(self, values, probs, x, reservoir):
        super(NeighbourLaw, self).__init__(values, probs)
        self.x = x
        self.reservoir = reservoir

    def reference(self):
        """The offspring type law of ``x`` in the branching process"""
        return offspring_type_law(self.x, self.reservoir.params)

    def tv_to_offspring(self):
        """The exact total variation distance to the offspring type law"""
        return self.tv(self.reference())


def reservoir_law(explored, n, params):
    """The type law of the reservoir after exploring ``explored``

    Args:
        explored: A sequence of :class:`SignedType` (or signed values).
        n (int): The population size.
        params (ModelParams): The model.

    Returns:
        ReservoirLaw: The reweighted law; with nothing explored it equals
        the base law.

    Raises:
        ValueError: If ``n < 1`` or if ``kernel(x_i, y) / n >= 1`` for some
            explored type and atom.

    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least one")
    explored = np.array([_value(x) for x in explored], dtype=float)
    base = base_type_law(params)
    if len(explored):
        ratio = kernel_values(explored[:, None], base.values[None, :], params)
        if np.any(ratio / n >= 1):
            raise ValueError(
                "kernel / n reaches one; n={0} is too small".format(n)
            )
        log_g = np.log1p(-ratio / n).sum(axis=0)
        log_g -= log_g.max()
        probs = np.exp(log_g) * base.probs
        probs /= probs.sum()
    else:
        probs = base.probs
    return ReservoirLaw(base.values, probs, base, explored, n, params)


def neighbour_type_law(x, reservoir):
    """The type law of a neighbour of ``x`` found in the reservoir

    The reservoir law is tilted by ``kernel(x, .)``.

    Args:
        x: A :class:`SignedType` or a signed value.
        reservoir (ReservoirLaw): The reservoir.

    Returns:
        NeighbourLaw: The tilted law.

    """
    if not isinstance(x, SignedType):
        x = SignedType.from_value(x)
    tilt = kernel_values(x.value, reservoir.values, reservoir.params)
    probs = tilt * reservoir.probs
    if probs.sum() <= 0:
        raise ValueError("the kernel vanishes on the reservoir")
    return NeighbourLaw(reservoir.values, probs / probs.sum(), x, reservoir)
