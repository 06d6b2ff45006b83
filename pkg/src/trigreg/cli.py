"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data or config error, 3 numeric failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import bounds as B
from .bayes import GibbsConfig, gamma_hat_gibbs, gibbs_run
from .errors import DegenerateError, NumericError, RankError, SchemaError, TrigRegError
from .estimator import Dataset, fit_ridge, fit_unregularized
from .experiments import EXPERIMENTS, run_experiment
from .plot import plot_records
from .storage import atomic_write, dumps_json, parse_config, read_records, write_experiment_outputs

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


BOUND_KINDS = (
    "theorem1", "approx-a", "approx-b", "combined-a", "combined-b",
    "sz", "sz-min-gamma", "crossover", "lgz", "wz", "report",
)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trigreg", description="Regularized trigonometric regression: fits, bounds and experiments.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser, required=True)

    f = sub.add_parser("fit", help="fit coefficients to a dataset")
    f.add_argument("--data", required=True, help="CSV with header x,y")
    f.add_argument("--space", required=True, help="hypothesis space JSON")
    f.add_argument("--gamma", type=float, required=True, help="regularization (0 gives minimum-norm least squares)")
    f.add_argument("--out", help="output JSON (default: stdout)")

    b = sub.add_parser("bound", help="evaluate one bound")
    b.add_argument("kind", choices=BOUND_KINDS)
    b.add_argument("--ctx", required=True, help="bound context JSON")
    b.add_argument("--gamma", type=float)
    b.add_argument("--space", help="hypothesis space JSON (lgz, wz)")
    b.add_argument("--M", type=float, help="output bound |y| <= M (sz)")
    b.add_argument("--approx-error", type=float, help="true approximation error (lgz)")
    b.add_argument("--sigma-norm", type=float, help="noise variance (lgz)")
    b.add_argument("--B-inf", type=float, help="sup norm of the regression function (wz)")
    b.add_argument("--eps", type=float, help="rate exponent in (0, 1) (wz)")

    s = sub.add_parser("select-gamma", help="closed-form gamma selectors")
    s.add_argument("--ctx", required=True)
    s.add_argument("--variant", choices=("a", "b", "both"), default="both")

    g = sub.add_parser("gibbs", help="Gibbs sampler for the evidence-optimal gamma")
    g.add_argument("--data", required=True)
    g.add_argument("--space", required=True)
    g.add_argument("--sigma2", type=float, required=True, help="known noise variance")
    g.add_argument("--total-samples", type=int, default=1500)
    g.add_argument("--keep-last", type=int, default=1000)
    g.add_argument("--init-gamma", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--trace", help="write the trace CSV here")
    g.add_argument("--include-alpha", action="store_true")

    e = sub.add_parser("experiment", help="run a Monte Carlo study")
    e.add_argument("name", choices=EXPERIMENTS)
    e.add_argument("--config", required=True)
    e.add_argument("--out-dir", required=True)
    e.add_argument("--seed", type=int, help="override the config seed")
    e.add_argument("--runs", type=int, help="override the number of runs")

    pl = sub.add_parser("plot", help="SVG plot from a records CSV")
    pl.add_argument("--records", required=True)
    pl.add_argument("--kind", choices=("boxplot", "line"), required=True)
    pl.add_argument("--columns", required=True, help="comma-separated column names")
    pl.add_argument("--group", help="grouping column for line plots")
    pl.add_argument("--log", action="store_true")
    pl.add_argument("--title", default="")
    pl.add_argument("--out", required=True)
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _load_dataset(path: str) -> Dataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SchemaError(f"{path}: file not found") from None
    try:
        return Dataset.from_csv(text)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError(f"bound {args.kind} requires " + ", ".join(f"--{m}" for m in missing))


def _cmd_fit(args) -> int:
    hs = parse_config(args.space, "space")
    d = _load_dataset(args.data)
    if args.gamma < 0 or math.isnan(args.gamma):
        raise UsageError("--gamma must be nonnegative")
    res = fit_unregularized(hs, d) if args.gamma == 0 else fit_ridge(hs, d, args.gamma)
    if not np.all(np.isfinite(res.alpha_hat)):
        raise NumericError("non-finite coefficients")
    _emit(dumps_json(res.to_dict()), args.out)
    return EXIT_OK


def _cmd_bound(args) -> int:
    ctx = parse_config(args.ctx, "context")
    k = args.kind
    if k not in ("sz-min-gamma", "report"):
        _need(args, "gamma")
    if k == "theorem1":
        val = B.sample_bound_theorem1(ctx, args.gamma)
    elif k == "approx-a":
        val = B.approx_bound_a(ctx, args.gamma)
    elif k == "approx-b":
        val = B.approx_bound_b(ctx, args.gamma)
    elif k == "combined-a":
        val = B.combined_bound(ctx, args.gamma, "a")
    elif k == "combined-b":
        val = B.combined_bound(ctx, args.gamma, "b")
    elif k == "sz":
        _need(args, "M")
        val = B.sz_bound(ctx, args.M, args.gamma)
    elif k == "sz-min-gamma":
        val = B.sz_min_gamma(ctx)
    elif k == "crossover":
        val = B.sz_crossover_M(ctx, args.gamma)
    elif k == "lgz":
        _need(args, "space", "approx-error", "sigma-norm")
        hs = parse_config(args.space, "space")
        val = B.lgz_bound(ctx, hs, args.gamma, args.approx_error, args.sigma_norm).probability_bound_at_delta
    elif k == "wz":
        _need(args, "space", "B-inf", "eps")
        hs = parse_config(args.space, "space")
        val = B.wz_bound(B.wz_constants(ctx, hs, args.B_inf, args.eps), ctx.N, ctx.delta)
    else:
        _need(args, "gamma")
        hs = parse_config(args.space, "space") if args.space else None
        extra = {} if hs is None else dict(
            approx_error=args.approx_error, sigma_norm=args.sigma_norm, B_inf=args.B_inf, eps=args.eps
        )
        rep = B.bound_report(ctx, hs, args.gamma, M=args.M, **extra)
        sys.stdout.write(dumps_json(rep))
        return EXIT_OK
    sys.stdout.write(f"{val!r}\n")
    return EXIT_OK


def _cmd_select(args) -> int:
    ctx = parse_config(args.ctx, "context")
    out = {}
    if args.variant in ("a", "both"):
        ga = B.gamma_hat_a(ctx)
        out["gamma_hat_a"] = ga.gamma if ga.condition_met else None
        out["condition_a_met"] = ga.condition_met
    if args.variant in ("b", "both"):
        out["gamma_hat_b"] = B.gamma_hat_b(ctx)
    sys.stdout.write(dumps_json(out))
    return EXIT_OK


def _cmd_gibbs(args) -> int:
    hs = parse_config(args.space, "space")
    d = _load_dataset(args.data)
    try:
        cfg = GibbsConfig(args.total_samples, args.keep_last, args.init_gamma, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    trace = gibbs_run(hs, d, cfg, sigma2=args.sigma2)
    if args.trace:
        atomic_write(args.trace, trace.to_csv(include_alpha=args.include_alpha))
    sys.stdout.write(dumps_json({"gamma_hat": gamma_hat_gibbs(trace, cfg)}))
    return EXIT_OK


def _cmd_experiment(args) -> int:
    cfg = parse_config(args.config, "experiment")
    if cfg.name != args.name:
        raise SchemaError(f"{args.config}: config is for {cfg.name!r}, not {args.name!r}")
    if args.seed is not None or args.runs is not None:
        d = cfg.to_dict()
        if args.seed is not None:
            d["seed"] = args.seed
        if args.runs is not None:
            d["runs"] = args.runs
        cfg = type(cfg).from_dict(d)
    recs, summary = run_experiment(cfg)
    rec_path, sum_path = write_experiment_outputs(args.out_dir, cfg.name, recs, summary)
    print(f"wrote {rec_path} and {sum_path}", file=sys.stderr)
    return EXIT_OK


def _cmd_plot(args) -> int:
    recs = read_records(args.records)
    cols = [c for c in args.columns.split(",") if c]
    svg = plot_records(recs, args.kind, cols, group=args.group, log=args.log, title=args.title)
    atomic_write(args.out, svg)
    return EXIT_OK


_COMMANDS = {
    "fit": _cmd_fit,
    "bound": _cmd_bound,
    "select-gamma": _cmd_select,
    "gibbs": _cmd_gibbs,
    "experiment": _cmd_experiment,
    "plot": _cmd_plot,
}


def dispatch(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.verb](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (NumericError, DegenerateError, RankError, FloatingPointError, np.linalg.LinAlgError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (TrigRegError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
