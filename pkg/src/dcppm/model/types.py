# -*- coding: utf-8 -*-

__all__ = [
    "SignedType",
    "TypeLaw",
    "make_type_law",
    "signed_law",
    "parse_spin",
    "spin_symbol",
]

import numpy as np

from .laws import WeightLaw, make_weight_law

_SPINS = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}


def parse_spin(value):
    """Convert ``"+"``, ``"-"``, ``+1`` or ``-1`` to the integer spin"""
    if isinstance(value, str):
        try:
            return _SPINS[value.strip()]
        except KeyError:
            raise ValueError("invalid spin {0!r}".format(value))
    if value in (1, -1):
        return int(value)
    raise ValueError("invalid spin {0!r}".format(value))


def spin_symbol(spin):
    return "+" if int(spin) > 0 else "-"


class SignedType:
    """The type of a particle: its spin times its weight

    Args:
        sign: The spin, ``+1`` or ``-1`` (``"+"`` and ``"-"`` are accepted).
        weight (float): The positive weight.

    """

    __slots__ = ("_sign", "_weight")

    def __init__(self, sign, weight):
        sign = parse_spin(sign)
        weight = float(weight)
        if not np.isfinite(weight) or weight <= 0:
            raise ValueError("weights must be positive and finite")
        object.__setattr__(self, "_sign", sign)
        object.__setattr__(self, "_weight", weight)

    def __setattr__(self, name, value):
        raise AttributeError("SignedType is immutable")

    @classmethod
    def from_value(cls, value):
        value = float(value)
        if value == 0:
            raise ValueError("a type cannot be zero")
        return cls(1 if value > 0 else -1, abs(value))

    @property
    def sign(self):
        return self._sign

    @property
    def weight(self):
        return self._weight

    @property
    def value(self):
        return self._sign * self._weight

    def flipped(self):
        return SignedType(-self._sign, self._weight)

    def __eq__(self, other):
        if not isinstance(other, SignedType):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "SignedType({0}, {1!r})".format(
            spin_symbol(self._sign), self._weight
        )


class TypeLaw:
    """A finite-support probability law over signed types

    Types are stored by their signed value ``sign * weight``; the values are
    sorted and distinct.

    Args:
        values: The signed values, nonzero, distinct and sorted.
        probs: The probabilities, summing to one.

    """

    def __init__(self, values, probs):
        values = np.atleast_1d(np.array(values, dtype=float))
        probs = np.atleast_1d(np.array(probs, dtype=float))
        if values.ndim != 1 or values.shape != probs.shape or not len(values):
            raise ValueError("values and probs must be matching 1-D arrays")
        if np.any(values == 0) or np.any(np.diff(values) <= 0):
            raise ValueError("type values must be nonzero, distinct, sorted")
        if np.any(probs < 0) or abs(probs.sum() - 1) > 1e-12:
            raise ValueError("type probabilities must sum to one")
        self._values = values
        self._probs = probs
        self._values.flags.writeable = False
        self._probs.flags.writeable = False

    @property
    def values(self):
        return self._values

    @property
    def probs(self):
        return self._probs

    @property
    def signs(self):
        return np.sign(self._values).astype(int)

    @property
    def weights(self):
        return np.abs(self._values)

    @property
    def types(self):
        return [SignedType.from_value(v) for v in self._values]

    def prob_of(self, x):
        """The probability of a single type"""
        value = x.value if isinstance(x, SignedType) else float(x)
        hit = self._values == value
        return float(self._probs[hit].sum())

    def sign_prob(self, sign):
        """The probability that the sign equals ``sign``"""
        return float(self._probs[self.signs == parse_spin(sign)].sum())

    def weight_marginal(self):
        """The law of the absolute value as a :class:`WeightLaw`"""
        return make_weight_law(list(zip(self.weights, self._probs)))

    def expect(self, func):
        """The expectation of ``func`` evaluated on the signed values"""
        return float(np.sum(func(self._values) * self._probs))

    def sample(self, rng, size=None):
        """Draw i.i.d. signed values"""
        index = rng.choice(len(self._values), size=size, p=self._probs)
        return self._values[index]

    def tv(self, other):
        """The exact total variation distance to another type law"""
        support = np.union1d(self._values, other.values)
        p = np.zeros(len(support))
        q = np.zeros(len(support))
        p[np.searchsorted(support, self._values)] = self._probs
        q[np.searchsorted(support, other.values)] = other.probs
        return float(0.5 * np.abs(p - q).sum())

    def __repr__(self):
        return "{0}(values={1}, probs={2})".format(
            type(self).__name__, self._values.tolist(), self._probs.tolist()
        )


def make_type_law(values, probs):
    """Build a canonical :class:`TypeLaw` from unnormalized atoms

    Duplicate values are merged, zero-probability atoms dropped and the
    probabilities normalized.

    Raises:
        ValueError: If the total mass is not positive.

    """
    values = np.asarray(values, dtype=float).ravel()
    probs = np.asarray(probs, dtype=float).ravel()
    if np.any(probs < 0) or not np.all(np.isfinite(probs)):
        raise ValueError("type probabilities must be nonnegative")
    total = probs.sum()
    if total <= 0:
        raise ValueError("a type law needs positive total mass")
    keep = probs > 0
    unique, inverse = np.unique(values[keep], return_inverse=True)
    merged = np.bincount(inverse, weights=probs[keep] / total)
    return TypeLaw(unique, merged / merged.sum())


def signed_law(law):
    """The law of ``sign * weight`` for a uniform sign and weight from ``law``

    Args:
        law (WeightLaw): The weight law.

    """
    if not isinstance(law, WeightLaw):
        raise TypeError("expected a WeightLaw")
    values = np.concatenate((-law.values, law.values))
    probs = 0.5 * np.concatenate((law.probs, law.probs))
    return make_type_law(values, probs)
