# -*- coding: utf-8 -*-

__all__ = [
    "WeightLaw",
    "make_weight_law",
    "parse_weight_law",
    "size_biased",
    "discretize_law",
]

import json
import os

import numpy as np

MOMENT_TOL = 1e-12


def _frozen(array):
    array = np.array(array, dtype=float)
    array.flags.writeable = False
    return array


class WeightLaw:
    """A finite-support law for the vertex weights

    Instances are immutable and always in canonical form: the atom values are
    distinct and sorted in ascending order and the probabilities sum to one.
    The first two moments are computed once at construction and every
    formula in this package reads the cached values.

    Use :func:`make_weight_law` to build a law from arbitrary atoms.

    Args:
        values: The atom values, distinct, positive and sorted.
        probs: The atom probabilities, summing to one.

    """

    def __init__(self, values, probs):
        values = np.atleast_1d(np.asarray(values, dtype=float))
        probs = np.atleast_1d(np.asarray(probs, dtype=float))
        if values.ndim != 1 or values.shape != probs.shape:
            raise ValueError("values and probs must be matching 1-D arrays")
        if not len(values):
            raise ValueError("a weight law needs at least one atom")
        if np.any(~np.isfinite(values)) or np.any(values <= 0):
            raise ValueError("weights must be positive and finite")
        if np.any(np.diff(values) <= 0):
            raise ValueError("atom values must be distinct and sorted")
        if np.any(probs < 0) or abs(probs.sum() - 1) > MOMENT_TOL:
            raise ValueError("atom probabilities must sum to one")

        self._values = _frozen(values)
        self._probs = _frozen(probs)
        self._m1 = float(np.sum(values * probs))
        self._m2 = float(np.sum(values ** 2 * probs))

    @classmethod
    def point_mass(cls, value=1.0):
        return cls([value], [1.0])

    @classmethod
    def uniform(cls, values):
        return make_weight_law([(v, 1.0) for v in values])

    @property
    def values(self):
        return self._values

    @property
    def probs(self):
        return self._probs

    @property
    def atoms(self):
        return list(zip(self._values.tolist(), self._probs.tolist()))

    @property
    def phi_min(self):
        return float(self._values[0])

    @property
    def phi_max(self):
        return float(self._values[-1])

    @property
    def m1(self):
        """The first moment of the weights"""
        return self._m1

    @property
    def m2(self):
        """The second moment of the weights"""
        return self._m2

    @property
    def size(self):
        return len(self._values)

    def sample(self, rng, size=None):
        """Draw i.i.d. weights from the law using a ``numpy`` generator"""
        return self._values[self.sample_index(rng, size=size)]

    def sample_index(self, rng, size=None):
        """Draw i.i.d. atom indices from the law"""
        if self.size == 1:
            return np.zeros(size, dtype=int) if size is not None else 0
        return rng.choice(self.size, size=size, p=self._probs)

    def atom_index(self, weights):
        """Map weights drawn from this law back to their atom indices

        Raises:
            ValueError: If a weight is not an atom of the law.

        """
        weights = np.asarray(weights, dtype=float)
        index = np.clip(
            np.searchsorted(self._values, weights), 0, self.size - 1
        )
        if np.any(self._values[index] != weights):
            raise ValueError("weights outside the support of the law")
        return index

    def contains(self, weight):
        return bool(np.any(self._values == float(weight)))

    def to_dict(self):
        return {"atoms": [[v, p] for v, p in self.atoms]}

    @classmethod
    def from_dict(cls, data):
        return make_weight_law(data["atoms"])

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, WeightLaw):
            return NotImplemented
        return np.array_equal(self._values, other._values) and np.array_equal(
            self._probs, other._probs
        )

    def __hash__(self):
        return hash((self._values.tobytes(), self._probs.tobytes()))

    def __repr__(self):
        return "WeightLaw(atoms={0})".format(self.atoms)


def make_weight_law(atoms):
    """Build a canonical weight law from a list of ``(value, prob)`` atoms

    Duplicate values are merged, the probabilities are normalized and atoms
    with zero probability are dropped.

    Args:
        atoms: A sequence of ``(value, prob)`` pairs. The probabilities only
            need to be nonnegative; they are normalized here.

    Raises:
        ValueError: If there are no atoms, if a value is not positive, if a
            probability is negative, or if all probabilities are zero.

    """
    atoms = np.asarray(atoms, dtype=float)
    if atoms.size == 0:
        raise ValueError("a weight law needs at least one atom")
    atoms = np.atleast_2d(atoms)
    if atoms.ndim != 2 or atoms.shape[1] != 2:
        raise ValueError("atoms must be (value, prob) pairs")
    values, probs = atoms[:, 0], atoms[:, 1]
    if np.any(~np.isfinite(values)) or np.any(values <= 0):
        raise ValueError("weights must be positive and finite")
    if np.any(~np.isfinite(probs)) or np.any(probs < 0):
        raise ValueError("atom probabilities must be nonnegative")
    total = probs.sum()
    if total <= 0:
        raise ValueError("at least one atom must have positive probability")

    keep = probs > 0
    unique, inverse = np.unique(values[keep], return_inverse=True)
    merged = np.bincount(inverse, weights=probs[keep] / total)
    return WeightLaw(unique, merged / merged.sum())


def size_biased(law):
    """The size-biased version of a weight law

    The atom probabilities are reweighted by their value and normalized by
    the first moment, so that the first moment of the result is
    ``law.m2 / law.m1``. This is the weight law of every non-root particle
    of the branching process.

    """
    probs = law.values * law.probs / law.m1
    return WeightLaw(law.values, probs / probs.sum())


def discretize_law(dist, lower, upper, num=16):
    """Discretize a bounded continuous law into a :class:`WeightLaw`

    The interval ``[lower, upper]`` is cut into ``num`` equal-width bins; each
    bin becomes one atom placed at the conditional mean of the law in that
    bin, carrying the bin's probability mass. Mass outside the interval is
    discarded and the result renormalized.

    Args:
        dist: A frozen ``scipy.stats`` continuous distribution.
        lower (float): The smallest weight, must be positive.
        upper (float): The largest weight.
        num (int): The number of bins.

    """
    if not 0 < lower < upper < np.inf:
        raise ValueError("need 0 < lower < upper < inf")
    num = int(num)
    if num < 1:
        raise ValueError("num must be at least one")
    edges = np.linspace(lower, upper, num + 1)
    mass = np.diff(dist.cdf(edges))
    atoms = []
    for lo, hi, p in zip(edges[:-1], edges[1:], mass):
        if p <= 0:
            continue
        mean = dist.expect(lambda x: x, lb=lo, ub=hi, conditional=True)
        atoms.append((float(np.clip(mean, lo, hi)), float(p)))
    return make_weight_law(atoms)


def parse_weight_law(desc):
    """Build a weight law from one of several loose descriptions

    Args:
        desc: A :class:`WeightLaw` (returned as is), a number (a point
            mass), a ``{"atoms": [[value, prob], ...]}`` mapping, a sequence
            of ``(value, prob)`` pairs, or a string holding any of these: a
            path to a JSON file, inline JSON, a short form like
            ``"1:0.5,2:0.5"`` or a bare number.

    Raises:
        ValueError: If the description cannot be parsed.

    """
    if desc is None:
        return WeightLaw.point_mass(1.0)
    if isinstance(desc, WeightLaw):
        return desc
    if isinstance(desc, (int, float, np.number)):
        return WeightLaw.point_mass(float(desc))
    if isinstance(desc, dict):
        return WeightLaw.from_dict(desc)
    if not isinstance(desc, str):
        return make_weight_law(desc)

    text = desc.strip()
    if os.path.isfile(text):
        with open(text, "r") as f:
            return parse_weight_law(json.load(f))
    if text.startswith(("{", "[")):
        return parse_weight_law(json.loads(text))
    try:
        if ":" not in text:
            return WeightLaw.point_mass(float(text))
        atoms = [item.split(":") for item in text.split(",") if item.strip()]
        return make_weight_law([(float(v), float(p)) for v, p in atoms])
    except ValueError as e:
        raise ValueError("invalid weight law {0!r}: {1}".format(desc, e))
