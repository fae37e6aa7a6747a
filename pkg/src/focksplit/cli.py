"""Command-line front end.

    focksplit dist --model exact --na 4 --nb 4 --exact-rationals
    focksplit compare --models exact stirling --na 25 --nb 25
    focksplit sample --model exact --na 2 --nb 2 --shots 100000 --seed 7
    focksplit figure 7 --format csv

Exit status: 0 on success, 2 for usage errors, 3 for domain errors (e.g. an
approximation asked for counts outside its validity region with
``--no-fallback``).  ``FOCKSPLIT_QUAD_NODES`` sets the default number of
quadrature nodes.
"""

from __future__ import annotations

import argparse
import sys

from .approx import OutsideValidityError, approx_distribution
from .baselines import (
    CoherentParams,
    classical_distribution,
    coherent_distribution,
    contrast,
    lambda0_closed_form,
    lambda0_distribution,
    pair_model_distribution,
    semiclassical_distribution,
)
from .experiment import compare, sample
from .figures import FIGURES, figure_dataset
from .numerics import QuadratureSpec, default_spec
from .quantum import BeamConfig, exact_distribution, quadrature_distribution
from .serialize import comparison_to_text, to_csv, to_json

MODELS = (
    "exact", "quad", "gauss", "stirling", "semiclassical", "classical",
    "coherent", "lambda0", "lambda0-literal", "pair",
)

EXIT_USAGE = 2
EXIT_DOMAIN = 3


class DomainError(Exception):
    pass


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"particle counts must be >= 0, got {value}")
    return value


def _spec(args, n: int) -> QuadratureSpec:
    spec = default_spec(n)
    if args.nodes is not None:
        spec = QuadratureSpec(args.nodes, spec.precision)
    return spec


def build_distribution(args):
    """Model output for the parsed ``dist``/``compare``/``sample`` options."""
    cfg = BeamConfig(args.na, args.nb, args.theta)
    n = cfg.n_total
    model = args.model
    if model == "exact":
        return exact_distribution(cfg)
    if model == "quad":
        return quadrature_distribution(cfg, _spec(args, n))
    if model in ("gauss", "stirling"):
        if n == 0:
            return exact_distribution(cfg)
        return approx_distribution(cfg, model, fallback=not args.no_fallback)
    if model in ("semiclassical", "classical"):
        r = contrast(cfg.n_alpha, cfg.n_beta) if n else 1.0
        if model == "classical":
            dist = classical_distribution(n, r)
        else:
            dist = semiclassical_distribution(n, r, _spec(args, n))
        return _with_config(dist, cfg)
    if model == "coherent":
        i_alpha = args.na if args.i_alpha is None else args.i_alpha
        i_beta = args.nb if args.i_beta is None else args.i_beta
        params = CoherentParams.from_intensities(i_alpha, i_beta, args.phase)
        spec = QuadratureSpec(args.nodes) if args.nodes else None
        return coherent_distribution(params, args.phase_averaged, spec)
    if model == "lambda0":
        return lambda0_distribution(cfg, _spec(args, n))
    if model == "lambda0-literal":
        return lambda0_closed_form(cfg, lambda0_distribution(cfg, _spec(args, n)))
    if model == "pair":
        return pair_model_distribution(cfg)
    raise DomainError(f"unknown model {model!r}")


def _with_config(dist, cfg):
    from dataclasses import replace

    return replace(dist, config=cfg)


def _add_model_options(p: argparse.ArgumentParser, models: bool = False):
    if not models:
        p.add_argument("--model", required=True, choices=MODELS)
    p.add_argument("--na", type=_count, required=True, help="particles in input alpha")
    p.add_argument("--nb", type=_count, required=True, help="particles in input beta")
    p.add_argument("--theta", type=float, default=0.0, help="alpha-arm phase (radians)")
    p.add_argument("--nodes", type=_count, default=None, help="quadrature nodes per angle")
    p.add_argument("--no-fallback", action="store_true",
                   help="fail instead of substituting exact values outside approximation validity")
    p.add_argument("--i-alpha", type=float, default=None, help="coherent: intensity of input alpha")
    p.add_argument("--i-beta", type=float, default=None, help="coherent: intensity of input beta")
    p.add_argument("--phase", type=float, default=0.0, help="coherent: relative input phase")
    p.add_argument("--phase-averaged", action="store_true", help="coherent: average over the phase")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="focksplit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="print one model's distribution")
    _add_model_options(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--exact-rationals", action="store_true", help="print rational models as num/den")

    p = sub.add_parser("compare", help="distance metrics between two models")
    p.add_argument("--models", nargs=2, required=True, choices=MODELS, metavar="MODEL")
    _add_model_options(p, models=True)
    p.add_argument("--floor", type=float, default=1e-9, help="reference floor for max_rel")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sample", help="simulate detection shots from a model")
    _add_model_options(p)
    p.add_argument("--shots", type=_count, required=True)
    p.add_argument("--seed", type=_count, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("figure", help="emit the dataset behind a figure")
    p.add_argument("figure", nargs="?", choices=tuple(FIGURES))
    p.add_argument("--list", action="store_true", help="list figure ids")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _run(args) -> str:
    if args.command == "dist":
        dist = build_distribution(args)
        if args.format == "json":
            return to_json(dist, args.exact_rationals)
        return to_csv(dist, args.exact_rationals)

    if args.command == "compare":
        dists = []
        for model in args.models:
            args.model = model
            dist = build_distribution(args)
            if not hasattr(dist, "n_total") or dist.n_total is None:
                raise DomainError(f"model {model!r} has no fixed total count to compare")
            dists.append(dist)
        report = compare(*dists, floor=args.floor)
        return to_json(report) if args.format == "json" else comparison_to_text(report)

    if args.command == "sample":
        dist = build_distribution(args)
        if args.model == "coherent":
            raise DomainError("sampling is defined over m1 at fixed N; coherent output has no fixed N")
        if args.seed >= 2**64:
            raise DomainError("seed must fit in 64 bits")
        result = sample(dist, args.shots, args.seed)
        result.meta["config"] = BeamConfig(args.na, args.nb, args.theta)
        return to_json(result) if args.format == "json" else to_csv(result)

    if args.command == "figure":
        if args.list:
            return "".join(f"{f.id}\t{f.title}\n" for f in FIGURES.values())
        if args.figure is None:
            raise DomainError("figure id required (see --list)")
        data = figure_dataset(args.figure)
        return data.to_json() if args.format == "json" else data.to_csv()
    raise DomainError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _run(args)
    except (DomainError, OutsideValidityError, ValueError) as exc:
        print(f"focksplit: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
