# -*- coding: utf-8 -*-

__all__ = ["STATISTICS", "CouplingReport", "coupling_experiment"]

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from ..graphs.neighborhood import neighborhood
from ..graphs.sampling import sample_dcppm
from ..stats import bootstrap_tv
from ..trees.branching import sample_tpoi
from ..utils import get_rng, logger, parallel_map, spawn_seeds
from .bounds import coupling_radius, growth_violations

STATISTICS = (
    "root_degree",
    "degree_spin",
    "generation_sizes",
    "child_weights",
)


@dataclass
class CouplingReport:
    """The outcome of a neighbourhood versus branching tree comparison"""

    n: int
    radius: int
    trials: int
    params: dict
    seed: object
    certified_radius: object
    statistics: dict = field(default_factory=dict)
    truncation_frequency: float = 0.0
    growth_violation_frequency: float = 0.0
    warnings: list = field(default_factory=list)

    def to_dict(self):
        data = asdict(self)
        data["statistics"] = {
            name: est.to_dict() for name, est in self.statistics.items()
        }
        return data

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _summarize(tree, law):
    """Reduce a rooted tree to the discrete statistics being compared"""
    kids = np.arange(tree.generation(1).start, tree.generation(1).stop)
    same = int(np.sum(tree.spin[kids] == tree.spin[0]))
    return {
        "root_degree": len(kids),
        "degree_spin": (len(kids), same),
        "generation_sizes": tuple(tree.generation_sizes(2)[1:]),
        "child_weights": law.atom_index(tree.weight[kids]),
    }


def _graph_trial(args):
    n, params, radius, seed, method = args
    rng = get_rng(seed)
    graph = sample_dcppm(n, params, seed=rng, method=method)
    root = int(rng.integers(n))
    ball = neighborhood(graph, root, radius)
    summary = _summarize(ball, params.law)
    summary["truncated"] = ball.truncated
    summary["growth_violation"] = bool(growth_violations(ball, n, params))
    return summary


def _tree_trial(args):
    params, radius, seed = args
    return _summarize(sample_tpoi(params, radius, seed=seed), params.law)


def _compare(name, graph_side, tree_side, trials, n_boot, confidence, rng):
    if name != "child_weights":
        x = np.array([s[name] for s in graph_side])
        y = np.array([s[name] for s in tree_side])
        return bootstrap_tv(
            x, y, n_boot=n_boot, confidence=confidence, seed=rng
        )

    def flatten(side):
        values = [s[name] for s in side]
        groups = np.repeat(np.arange(len(values)), [len(v) for v in values])
        return np.concatenate(values).astype(int), groups

    x, x_groups = flatten(graph_side)
    y, y_groups = flatten(tree_side)
    return bootstrap_tv(
        x,
        y,
        n_boot=n_boot,
        confidence=confidence,
        seed=rng,
        x_groups=x_groups,
        y_groups=y_groups,
        x_num_groups=trials,
        y_num_groups=trials,
    )


def coupling_experiment(
    n,
    params,
    radius,
    trials,
    seed=None,
    statistics=STATISTICS,
    n_boot=1000,
    confidence=0.95,
    method="grouped",
    n_jobs=1,
    progress_bar=False,
):
    """Compare graph neighbourhoods with the branching tree they approach

    Each trial samples a fresh graph, picks a uniform root and explores its
    ball of radius ``radius``; independently, ``trials`` branching trees are
    grown to the same depth with a root weight drawn from the weight law.
    Discrete statistics of both samples are compared by their plug-in total
    variation distance with bootstrap intervals.

    Args:
        n (int): The number of vertices.
        params (ModelParams): The model.
        radius (int): The exploration radius.
        trials (int): The number of neighbourhoods and of trees.
        seed: The master seed.
        statistics: A subset of :data:`STATISTICS`: ``"root_degree"``,
            ``"degree_spin"`` (root degree with the number of children of
            the root's spin), ``"generation_sizes"`` (sizes at depths one
            and two) and ``"child_weights"`` (the weight atoms of the root's
            children, bootstrapped by trial).
        n_boot (int): The number of bootstrap resamples.
        confidence (float): The coverage of the intervals.
        method (str): The graph sampler (see :func:`graphs.sample_dcppm`).
        n_jobs (int): The number of worker processes.
        progress_bar: Show a progress bar over graph trials.

    Returns:
        CouplingReport: The comparison, with the frequency of neighbourhoods
        that are not trees and of neighbourhoods outgrowing the envelope
        ``2^s kappa_max^s log n``.

    """
    trials = int(trials)
    radius = int(radius)
    if trials < 1:
        raise ValueError("trials must be at least one")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    statistics = tuple(statistics)
    unknown = set(statistics) - set(STATISTICS)
    if unknown:
        raise ValueError("unknown statistics {0}".format(sorted(unknown)))

    notes = []
    try:
        certified = coupling_radius(n, params)
    except ValueError as e:
        certified = None
        notes.append("no certified coupling radius: {0}".format(e))
    else:
        if radius > certified:
            notes.append(
                "radius {0} exceeds the certified radius {1}".format(
                    radius, certified
                )
            )
    for note in notes:
        logger.warning(note)

    seeds = spawn_seeds(seed, 2 * trials + 1)
    logger.info(
        "coupling experiment: n=%d, radius=%d, trials=%d", n, radius, trials
    )
    graph_side = parallel_map(
        _graph_trial,
        [(n, params, radius, s, method) for s in seeds[:trials]],
        n_jobs=n_jobs,
        progress_bar=progress_bar,
        desc="graphs",
    )
    tree_side = parallel_map(
        _tree_trial,
        [(params, radius, s) for s in seeds[trials : 2 * trials]],
        n_jobs=n_jobs,
    )

    rng = get_rng(seeds[-1])
    estimates = {
        name: _compare(
            name, graph_side, tree_side, trials, n_boot, confidence, rng
        )
        for name in statistics
    }
    return CouplingReport(
        n=int(n),
        radius=radius,
        trials=trials,
        params=params.to_dict(),
        seed=seed if seed is None or isinstance(seed, int) else str(seed),
        certified_radius=certified,
        statistics=estimates,
        truncation_frequency=float(
            np.mean([s["truncated"] for s in graph_side])
        ),
        growth_violation_frequency=float(
            np.mean([s["growth_violation"] for s in graph_side])
        ),
        warnings=notes,
    )
