# -*- coding: utf-8 -*-

__all__ = [
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

import json

import numpy as np

from .laws import WeightLaw, make_weight_law
from .types import SignedType, make_type_law, signed_law


class ModelParams:
    """The parameters of the degree-corrected planted-partition model

    Vertices of the same community are joined with probability
    ``phi_u * phi_v * a / n`` and vertices of different communities with
    probability ``phi_u * phi_v * b / n``.

    ``a = b = 0`` is accepted and describes the empty graph; the operations
    that divide by ``a + b`` reject it.

    Args:
        a (float): The same-community rate.
        b (float): The cross-community rate.
        law (WeightLaw): The law of the i.i.d. vertex weights. Defaults to
            the point mass at one (the ordinary planted-partition model).

    """

    def __init__(self, a, b, law=None):
        a = float(a)
        b = float(b)
        if not (np.isfinite(a) and np.isfinite(b)) or a < 0 or b < 0:
            raise ValueError("the rates a and b must be finite and >= 0")
        if law is None:
            law = WeightLaw.point_mass(1.0)
        if not isinstance(law, WeightLaw):
            law = make_weight_law(law)
        self._a = a
        self._b = b
        self._law = law

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def law(self):
        return self._law

    @property
    def total_rate(self):
        return self._a + self._b

    @property
    def kappa_max(self):
        """The largest kernel value over the support"""
        return max(self._a, self._b) * self._law.phi_max ** 2

    @property
    def kappa_min(self):
        """The smallest kernel value over the support"""
        return min(self._a, self._b) * self._law.phi_min ** 2

    @property
    def epsilon(self):
        """The flip probability ``b / (a + b)`` of the broadcast process"""
        self._require_rate()
        return self._b / (self._a + self._b)

    @property
    def offspring_mean(self):
        """The mean offspring of a size-biased particle, ``(a+b)/2 Phi2``

        This is also the branching number of the tree and the giant
        component criterion: a giant component exists iff it exceeds one.

        """
        return 0.5 * (self._a + self._b) * self._law.m2

    giant_stat = offspring_mean

    @property
    def threshold_stat(self):
        return ks_threshold_stat(self)

    @property
    def detectable(self):
        """Is the model above the detectability threshold?"""
        return self.threshold_stat > 1

    def _require_rate(self):
        if self._a + self._b <= 0:
            raise ValueError("a + b must be positive")

    def max_edge_probability(self, n):
        return self.kappa_max / float(n)

    def with_rates(self, a, b):
        return ModelParams(a, b, self._law)

    def to_dict(self):
        return {"a": self._a, "b": self._b, "law": self._law.to_dict()}

    @classmethod
    def from_dict(cls, data):
        law = data.get("law")
        if law is not None:
            law = WeightLaw.from_dict(law)
        return cls(data["a"], data["b"], law)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, ModelParams):
            return NotImplemented
        return (self._a, self._b, self._law) == (
            other._a,
            other._b,
            other._law,
        )

    def __hash__(self):
        return hash((self._a, self._b, self._law))

    def __repr__(self):
        return "ModelParams(a={0!r}, b={1!r}, law={2!r})".format(
            self._a, self._b, self._law
        )


def _value(x):
    if isinstance(x, SignedType):
        return x.value
    return np.asarray(x, dtype=float)


def kernel_values(x, y, params):
    """The kernel evaluated on arrays of signed type values (broadcasting)"""
    prod = np.asarray(x, dtype=float) * np.asarray(y, dtype=float)
    return np.abs(prod) * np.where(prod > 0, params.a, params.b)


def kernel(x, y, params):
    """The connection kernel between two types

    Two vertices of types ``x`` and ``y`` are joined with probability
    ``kernel(x, y) / n``: the product of the weights times ``a`` when the
    signs agree and times ``b`` when they differ.

    Args:
        x, y: :class:`SignedType` instances or signed values.
        params (ModelParams): The model.

    """
    result = kernel_values(_value(x), _value(y), params)
    if np.ndim(result) == 0:
        return float(result)
    return result


def lambda_total(x, params):
    """The total offspring intensity of a particle of type ``x``

    This is the integral of ``kernel(x, .)`` against the type law ``mu``,
    which halves the weight law over each sign: ``|x| (a + b) / 2 Phi1``.

    """
    weight = np.abs(_value(x))
    result = weight * 0.5 * (params.a + params.b) * params.law.m1
    if np.ndim(result) == 0:
        return float(result)
    return result


def base_type_law(params):
    """The type law ``mu``: a uniform spin times a weight from the law"""
    return signed_law(params.law)


def tilted_law(base, x, params):
    """Reweight a type law by ``kernel(x, .)`` and normalize

    Raises:
        ValueError: If the kernel vanishes on the whole support.

    """
    tilt = kernel_values(_value(x), base.values, params) * base.probs
    if tilt.sum() <= 0:
        raise ValueError("the kernel vanishes on the support of the law")
    return make_type_law(base.values, tilt)


def offspring_type_law(x, params):
    """The law of the type of a child of a particle of type ``x``

    The child keeps the parent's sign with probability ``a / (a + b)``; its
    weight is independent of its sign and follows the size-biased law.

    Raises:
        ValueError: If ``a + b == 0``.

    """
    params._require_rate()
    if not isinstance(x, SignedType):
        x = SignedType.from_value(x)
    return tilted_law(base_type_law(params), x, params)


def ks_threshold_stat(params):
    """The detectability statistic ``(a - b)^2 Phi2 / (2 (a + b))``

    Reconstruction positively correlated with the communities is impossible
    when this is at most one.

    Raises:
        ValueError: If ``a + b == 0``.

    """
    params._require_rate()
    a, b = params.a, params.b
    return (a - b) ** 2 * params.law.m2 / (2 * (a + b))


def params_from_threshold(stat, degree, law=None):
    """Find ``a >= b`` with a given threshold statistic and ``a + b``

    Args:
        stat (float): The target value of :func:`ks_threshold_stat`.
        degree (float): The value of ``a + b``.
        law (Optional[WeightLaw]): The weight law (point mass by default).

    Raises:
        ValueError: If no nonnegative ``b`` reaches the target.

    """
    if law is None:
        law = WeightLaw.point_mass(1.0)
    if stat < 0 or degree <= 0:
        raise ValueError("need stat >= 0 and degree > 0")
    gap = np.sqrt(2 * degree * stat / law.m2)
    if gap > degree:
        raise ValueError(
            "threshold statistic {0} unreachable with a + b = {1}".format(
                stat, degree
            )
        )
    return ModelParams(0.5 * (degree + gap), 0.5 * (degree - gap), law)
