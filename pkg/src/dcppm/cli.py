# -*- coding: utf-8 -*-

__all__ = ["main", "build_parser"]

import argparse
import json
import logging
import sys

import numpy as np

from .coupling import coupling_experiment
from .experiments import (
    SweepConfig,
    expected_matrix_eigencheck,
    metadata_path,
    threshold_sweep,
)
from .graphs import (
    largest_component_fraction,
    read_graph,
    sample_dcppm,
    write_graph,
)
from .inference import (
    METHODS,
    estimate_expected_delta,
    graph_posterior_bruteforce,
    overlap,
    spectral_bisection,
)
from .model import ModelParams, parse_weight_law
from .trees import ROOT_LAWS, sample_tpoi, sample_tpoi_typed
from .utils import logger


def _params(args):
    return ModelParams(args.a, args.b, parse_weight_law(args.law))


def _emit(data, args):
    text = json.dumps(data, indent=2, default=_to_builtin)
    if args.output is None:
        print(text)
    else:
        with open(args.output, "w") as f:
            f.write(text + "\n")


def _to_builtin(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError("cannot serialize {0!r}".format(value))


def run_sample(args):
    params = _params(args)
    graph = sample_dcppm(args.n, params, seed=args.seed, method=args.method)
    if args.graph_out is not None:
        write_graph(graph, args.graph_out, params.a, params.b)
    _emit(
        {
            "params": params.to_dict(),
            "n": graph.n,
            "num_edges": graph.num_edges,
            "mean_degree": float(graph.degrees().mean()),
            "giant_frac": largest_component_fraction(graph),
            "graph_out": args.graph_out,
        },
        args,
    )


def run_tree(args):
    params = _params(args)
    sampler = sample_tpoi_typed if args.typed else sample_tpoi
    tree = sampler(params, args.depth, root_law=args.root_law, seed=args.seed)
    data = tree.to_dict()
    data["generation_sizes"] = tree.generation_sizes().tolist()
    data["discarded"] = tree.discarded
    _emit(data, args)


def run_couple(args):
    report = coupling_experiment(
        args.n,
        _params(args),
        args.radius,
        args.trials,
        seed=args.seed,
        n_boot=args.n_boot,
        method=args.method,
        n_jobs=args.n_jobs,
    )
    _emit(report.to_dict(), args)


def run_delta(args):
    params = _params(args)
    results = {}
    for m in args.m:
        est = estimate_expected_delta(
            params, m, args.trials, seed=args.seed, n_jobs=args.n_jobs
        )
        results[str(m)] = est.to_dict()
    _emit({"params": params.to_dict(), "delta": results}, args)


def run_posterior(args):
    graph, a, b = read_graph(args.graph_in)
    params = ModelParams(a, b)
    anchors = [(int(v), s) for v, s in args.anchor or []]
    post = graph_posterior_bruteforce(graph, params, args.u, anchor=anchors)
    data = post.to_dict()
    data.update({"u": args.u, "anchors": anchors})
    _emit(data, args)


def run_estimate(args):
    graph, _, _ = read_graph(args.graph_in)
    estimate = spectral_bisection(graph, method=args.method, seed=args.seed)
    data = estimate.to_dict()
    data["overlap"] = overlap(graph.spins, estimate)
    _emit(data, args)


def run_sweep(args):
    with open(args.config, "r") as f:
        data = json.load(f)
    if args.output is not None:
        data["output"] = args.output
    if data.get("output") is None:
        raise ValueError("sweep needs an output path (--output or config)")
    config = SweepConfig.from_dict(data)
    rows, failures = threshold_sweep(config)
    print(
        json.dumps(
            {
                "rows": len(rows),
                "failures": len(failures),
                "csv": config.output,
                "metadata": metadata_path(config.output),
            }
        )
    )


def run_eigencheck(args):
    result = expected_matrix_eigencheck(args.n, _params(args), seed=args.seed)
    _emit(result.to_dict(), args)


def _add_model(parser):
    parser.add_argument("--a", type=float, required=True)
    parser.add_argument("--b", type=float, required=True)
    parser.add_argument(
        "--law",
        default=None,
        help="weight law: JSON file, inline JSON, '1:0.5,2:0.5' or a number",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dcppm",
        description="Simulation and inference for the degree-corrected "
        "planted partition model",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress messages, -vv for debugging output",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--output", "-o", default=None)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("sample", parents=[common], help="sample a graph")
    _add_model(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=("auto", "direct", "grouped"), default="auto"
    )
    p.add_argument("--graph-out", default=None)
    p.set_defaults(func=run_sample)

    p = sub.add_parser("tree", parents=[common], help="sample a tree")
    _add_model(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--root-law", choices=ROOT_LAWS, default="plain")
    p.add_argument("--typed", action="store_true")
    p.set_defaults(func=run_tree)

    p = sub.add_parser(
        "couple", parents=[common], help="neighbourhood coupling experiment"
    )
    _add_model(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n-boot", type=int, default=1000)
    p.add_argument(
        "--method", choices=("auto", "direct", "grouped"), default="grouped"
    )
    p.add_argument("--n-jobs", type=int, default=1)
    p.set_defaults(func=run_couple)

    p = sub.add_parser(
        "delta-m", parents=[common], help="expected root reconstruction gap"
    )
    _add_model(p)
    p.add_argument("--m", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n-jobs", type=int, default=1)
    p.set_defaults(func=run_delta)

    p = sub.add_parser(
        "posterior", parents=[common], help="exact posterior of one spin"
    )
    p.add_argument("--graph-in", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument(
        "--anchor",
        nargs=2,
        action="append",
        metavar=("V", "SPIN"),
        help="condition on the spin of vertex V (repeatable)",
    )
    p.set_defaults(func=run_posterior)

    p = sub.add_parser(
        "estimate", parents=[common], help="spectral bisection of a graph"
    )
    p.add_argument("--graph-in", required=True)
    p.add_argument("--method", choices=METHODS, default="adjacency")
    p.set_defaults(func=run_estimate)

    p = sub.add_parser("sweep", parents=[common], help="threshold sweep")
    p.add_argument("--config", required=True)
    p.set_defaults(func=run_sweep)

    p = sub.add_parser(
        "eigencheck", parents=[common], help="expected matrix spectrum"
    )
    _add_model(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=run_eigencheck)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s"
    )
    try:
        args.func(args)
    except (ValueError, OSError) as e:
        logger.error(str(e))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
