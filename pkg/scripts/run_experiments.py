"""Run the Monte Carlo studies in configs/ and draw their figures.

    python scripts/run_experiments.py                 # all studies
    python scripts/run_experiments.py tradeoff wz_compare --out results
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from trigreg.experiments import EXPERIMENTS, run_experiment
from trigreg.plot import plot_records
from trigreg.storage import atomic_write, parse_config, write_experiment_outputs

ROOT = Path(__file__).resolve().parent.parent

FIGURES = {
    "sz_compare": [("boxplot", ["reldiff_theorem1", "reldiff_sz"], None, True)],
    "lgz_compare": [("boxplot", ["reldiff_theorem1", "reldiff_sz", "reldiff_lgz"], None, True)],
    "tradeoff": [("boxplot", ["true_sample_b", "bound_sample_b", "true_approx_b", "bound_approx_b"], None, True)],
    "wz_compare": [("line", ["logreldiff_theorem1", "logreldiff_wz"], "eps", False)],
    "reg_benefit": [("boxplot", ["reldisc_b", "reldisc_zero", "reldisc_gibbs"], None, False)],
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("names", nargs="*", help="experiments to run (default: all)")
    ap.add_argument("--configs", default=str(ROOT / "configs"))
    ap.add_argument("--out", default=str(ROOT / "results"))
    ap.add_argument("--seed", type=int)
    args = ap.parse_args(argv)
    names = args.names or list(EXPERIMENTS)
    for name in names:
        if name not in EXPERIMENTS:
            ap.error(f"unknown experiment {name!r}")
        cfg = parse_config(Path(args.configs) / f"{name}.json", "experiment")
        if args.seed is not None:
            cfg = cfg.with_seed(args.seed)
        t0 = time.perf_counter()
        recs, summary = run_experiment(cfg)
        write_experiment_outputs(args.out, name, recs, summary)
        for kind, cols, group, log in FIGURES[name]:
            svg = plot_records(recs, kind, cols, group=group, log=log, title=name)
            atomic_write(Path(args.out) / f"{name}_{kind}.svg", svg)
        print(f"{name}: {cfg.runs} runs in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
        for col in cols:
            s = summary["columns"][col]
            print(f"  {col:24s} mean {s['mean']:.4g}  median {s['median']:.4g}  std {s['std']:.4g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
