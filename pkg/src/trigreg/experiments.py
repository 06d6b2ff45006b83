"""Seeded Monte Carlo studies comparing error bounds with true errors.

Every run draws its own generator from ``(seed, run_index)``, so results do
not depend on how runs are spread over worker processes.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy import linalg

from .basis import Frequency, HypothesisSpace, Parity, feature_matrix
from .bayes import GibbsConfig, gibbs_run, gamma_hat_gibbs
from .bounds import (
    BoundContext,
    approx_bound_a,
    approx_bound_b,
    gamma_hat_a,
    gamma_hat_b,
    lgz_bound,
    log_relative_difference,
    log_relative_difference_from_log,
    sample_bound_theorem1,
    sample_constant,
    sz_bound,
    sz_crossover_M,
    sz_min_gamma,
    wz_constants,
    wz_gamma,
    wz_log_bound,
)
from .errors import DegenerateError, SchemaError
from .estimator import PINV_RCOND, Dataset, true_errors_coeffs
from .functions import SpectralFunction, eval_function, l2_norm, project

EXPERIMENTS = ("sz_compare", "lgz_compare", "tradeoff", "wz_compare", "reg_benefit")
SUP_GRID_POINTS = 10_000
EXCLUDE_BELOW = 1e-12


# --- configuration -----------------------------------------------------------

def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _is_real(v) -> bool:
    return (isinstance(v, (int, float)) and not isinstance(v, bool)) and math.isfinite(v)


def _tagged(d: Any, where: str, kinds: dict[str, dict[str, Callable]]) -> dict:
    if not isinstance(d, dict) or "kind" not in d:
        raise SchemaError(f"{where}: expected an object with a 'kind' key")
    kind = d["kind"]
    if kind not in kinds:
        raise SchemaError(f"{where}.kind must be one of {sorted(kinds)}, got {kind!r}")
    spec = kinds[kind]
    keys = set(d) - {"kind"}
    if keys != set(spec):
        raise SchemaError(f"{where}: kind {kind!r} needs keys {sorted(spec)}, got {sorted(keys)}")
    for k, check in spec.items():
        if not check(d[k]):
            raise SchemaError(f"{where}.{k}: invalid value {d[k]!r}")
    return dict(d)


@dataclass(frozen=True)
class GammaGrid:
    lo: float
    hi: float
    points: int
    log: bool = True

    def __post_init__(self):
        if not (self.lo > 0 and self.hi >= self.lo and self.points >= 1):
            raise SchemaError("gamma_grid needs 0 < lo <= hi and points >= 1")

    def values(self) -> np.ndarray:
        if self.log:
            return np.logspace(math.log10(self.lo), math.log10(self.hi), self.points)
        return np.linspace(self.lo, self.hi, self.points)


@dataclass(frozen=True)
class ExperimentConfig:
    """One Monte Carlo study.

    ``lambda_spec``: ``{"kind": "fixed", "value": v}`` or ``{"kind": "uniform", "lo", "hi"}``.
    ``E_spec``: ``{"kind": "fixed", "value": E}`` or ``{"kind": "pairs_range", "lo", "hi"}``
    (E/2 drawn uniformly from the integer range).
    ``N_spec``: ``{"kind": "fixed", "value": n}``, ``{"kind": "range", "lo", "hi", "step"}``
    or ``{"kind": "up_to_half_E", "lo"}`` (N uniform on lo..E/2).
    """

    name: str
    runs: int
    seed: int
    X: float
    pool: tuple[int, int]
    n_pairs: int
    E_spec: dict
    lambda_spec: dict
    snr: float
    noise: str
    N_spec: dict
    delta: float
    gamma_grid: Optional[GammaGrid] = None
    eps_grid: Optional[tuple[float, ...]] = None
    gibbs: Optional[dict] = None

    def __post_init__(self):
        if self.name not in EXPERIMENTS:
            raise SchemaError(f"name must be one of {list(EXPERIMENTS)}, got {self.name!r}")
        if not _is_int(self.runs) or self.runs < 1:
            raise SchemaError("runs must be an integer >= 1")
        if not _is_int(self.seed):
            raise SchemaError("seed must be an integer")
        if not (_is_real(self.X) and self.X > 0):
            raise SchemaError("X must be a positive real")
        lo, hi = self.pool
        if not (_is_int(lo) and _is_int(hi) and 1 <= lo <= hi):
            raise SchemaError("pool must be [lo, hi] with integers 1 <= lo <= hi")
        if not _is_int(self.n_pairs) or not 1 <= self.n_pairs <= hi - lo + 1:
            raise SchemaError(f"n_pairs must be an integer in 1..{hi - lo + 1} (pool size)")
        pos_int = lambda v: _is_int(v) and v >= 1  # noqa: E731
        e = _tagged(self.E_spec, "E_spec", {"fixed": {"value": pos_int}, "pairs_range": {"lo": pos_int, "hi": pos_int}})
        if e["kind"] == "fixed":
            if e["value"] % 2:
                raise SchemaError(f"E_spec.value: E must be even, got {e['value']}")
            max_half = e["value"] // 2
        else:
            if e["lo"] > e["hi"]:
                raise SchemaError("E_spec: lo must not exceed hi")
            max_half = e["hi"]
        if max_half > self.n_pairs:
            raise SchemaError(f"E_spec: E/2 = {max_half} exceeds n_pairs = {self.n_pairs}")
        _tagged(
            self.lambda_spec,
            "lambda_spec",
            {
                "fixed": {"value": lambda v: _is_real(v) and v > 0},
                "uniform": {"lo": lambda v: _is_real(v) and v >= 0, "hi": lambda v: _is_real(v) and v > 0},
            },
        )
        if self.lambda_spec["kind"] == "uniform" and self.lambda_spec["lo"] >= self.lambda_spec["hi"]:
            raise SchemaError("lambda_spec: lo must be below hi")
        if not (_is_real(self.snr) and self.snr > 0):
            raise SchemaError("snr must be a positive real")
        if self.noise not in ("uniform", "gaussian"):
            raise SchemaError("noise must be 'uniform' or 'gaussian'")
        n = _tagged(
            self.N_spec,
            "N_spec",
            {
                "fixed": {"value": pos_int},
                "range": {"lo": pos_int, "hi": pos_int, "step": pos_int},
                "up_to_half_E": {"lo": pos_int},
            },
        )
        if n["kind"] == "range" and n["lo"] > n["hi"]:
            raise SchemaError("N_spec: lo must not exceed hi")
        if not (_is_real(self.delta) and 0 < self.delta < 1):
            raise SchemaError("delta must lie in (0, 1)")
        if self.name in ("tradeoff", "reg_benefit") and self.gamma_grid is None:
            raise SchemaError(f"{self.name} requires gamma_grid")
        if self.name == "wz_compare":
            if not self.eps_grid:
                raise SchemaError("wz_compare requires a nonempty eps_grid")
            if not all(_is_real(v) and 0 < v < 1 for v in self.eps_grid):
                raise SchemaError("eps_grid entries must lie in (0, 1)")
        elif self.eps_grid is not None:
            raise SchemaError("eps_grid is only valid for wz_compare")
        if self.gibbs is not None:
            if self.name != "reg_benefit":
                raise SchemaError("gibbs settings are only valid for reg_benefit")
            extra = set(self.gibbs) - {"total_samples", "keep_last", "init_gamma"}
            if extra:
                raise SchemaError(f"gibbs: unknown key(s) {sorted(extra)}")
            try:
                GibbsConfig(**self.gibbs)
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"gibbs: {exc}") from None

    def gibbs_config(self, seed) -> GibbsConfig:
        return GibbsConfig(**(self.gibbs or {}), seed=seed)

    def with_seed(self, seed: int) -> "ExperimentConfig":
        d = self.to_dict()
        d["seed"] = seed
        return ExperimentConfig.from_dict(d)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pool"] = list(self.pool)
        d["gamma_grid"] = None if self.gamma_grid is None else asdict(self.gamma_grid)
        d["eps_grid"] = None if self.eps_grid is None else list(self.eps_grid)
        return {k: v for k, v in d.items() if v is not None}

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        if not isinstance(d, dict):
            raise SchemaError("experiment config must be an object")
        required = {"name", "runs", "seed", "X", "pool", "n_pairs", "E_spec", "lambda_spec", "snr", "noise", "N_spec", "delta"}
        optional = {"gamma_grid", "eps_grid", "gibbs"}
        extra = set(d) - required - optional
        if extra:
            raise SchemaError(f"unknown key(s): {sorted(extra)}")
        missing = required - set(d)
        if missing:
            raise SchemaError(f"missing key(s): {sorted(missing)}")
        kw = dict(d)
        pool = kw["pool"]
        if not (isinstance(pool, (list, tuple)) and len(pool) == 2):
            raise SchemaError("pool must be a two-element list [lo, hi]")
        kw["pool"] = tuple(pool)
        gg = kw.get("gamma_grid")
        if gg is not None:
            if not isinstance(gg, dict) or not {"lo", "hi", "points"} <= set(gg) <= {"lo", "hi", "points", "log"}:
                raise SchemaError("gamma_grid needs keys lo, hi, points (and optional log)")
            if not _is_int(gg["points"]):
                raise SchemaError("gamma_grid.points must be an integer")
            kw["gamma_grid"] = GammaGrid(**gg)
        if kw.get("eps_grid") is not None:
            if not isinstance(kw["eps_grid"], (list, tuple)):
                raise SchemaError("eps_grid must be a list")
            kw["eps_grid"] = tuple(kw["eps_grid"])
        return cls(**kw)


# --- generators --------------------------------------------------------------

def _draw_lambda(cfg: ExperimentConfig, rng: np.random.Generator) -> float:
    spec = cfg.lambda_spec
    if spec["kind"] == "fixed":
        return float(spec["value"])
    lam = 0.0
    while lam <= 0.0:  # a draw of exactly lo = 0 would give an invalid space
        lam = float(rng.uniform(spec["lo"], spec["hi"]))
    return lam


def gen_regression_function(cfg: ExperimentConfig, rng: np.random.Generator) -> tuple[SpectralFunction, HypothesisSpace]:
    """Random f_rho on ``n_pairs`` sine/cosine pairs and a space on a random subset of them."""
    lam = _draw_lambda(cfg, rng)
    lo, hi = cfg.pool
    qs = rng.choice(np.arange(lo, hi + 1), cfg.n_pairs, replace=False)
    sd = math.sqrt(lam)
    c_sin = rng.normal(0.0, sd, cfg.n_pairs)
    c_cos = rng.normal(0.0, sd, cfg.n_pairs)
    e = cfg.E_spec
    half = e["value"] // 2 if e["kind"] == "fixed" else int(rng.integers(e["lo"], e["hi"] + 1))
    sel = rng.choice(cfg.n_pairs, half, replace=False)
    coeffs = {}
    for q, a, b in zip(qs.tolist(), c_sin.tolist(), c_cos.tolist()):
        coeffs[Frequency(q, Parity.SIN)] = a
        coeffs[Frequency(q, Parity.COS)] = b
    f_rho = SpectralFunction(cfg.X, coeffs)
    hs = HypothesisSpace.uniform(cfg.X, tuple(int(q) for q in qs[sel]), lam)
    return f_rho, hs


def noise_std(f_rho: SpectralFunction, snr: float) -> float:
    """sigma with sigma^2 = ||f_rho||^2 / SNR."""
    return l2_norm(f_rho) / math.sqrt(snr)


def gen_dataset(f_rho: SpectralFunction, cfg: ExperimentConfig, N: int, rng: np.random.Generator) -> Dataset:
    if N < 1:
        raise ValueError("N must be >= 1")
    sigma = noise_std(f_rho, cfg.snr)
    xs = rng.uniform(-cfg.X / 2, cfg.X / 2, N)
    if cfg.noise == "uniform":
        a = sigma * math.sqrt(3.0)
        e = rng.uniform(-a, a, N)
    else:
        e = rng.normal(0.0, sigma, N)
    ys = np.atleast_1d(eval_function(f_rho, xs)) + e
    return Dataset(xs, ys, meta={"noise_std": sigma, "snr": cfg.snr})


def draw_N(cfg: ExperimentConfig, hs: HypothesisSpace, rng: np.random.Generator) -> int:
    spec = cfg.N_spec
    if spec["kind"] == "fixed":
        return int(spec["value"])
    if spec["kind"] == "range":
        return int(rng.choice(np.arange(spec["lo"], spec["hi"] + 1, spec["step"])))
    return int(rng.integers(spec["lo"], max(spec["lo"], hs.E // 2) + 1))


# --- shared numerics ---------------------------------------------------------

class _Problem:
    """Feature matrix and projections cached for repeated fits on one dataset."""

    def __init__(self, hs: HypothesisSpace, f_rho: SpectralFunction, d: Dataset):
        self.hs = hs
        self.d = d
        self.Phi = feature_matrix(hs, d.xs)
        self.G = self.Phi.T @ self.Phi / d.N
        self.b = self.Phi.T @ d.ys / d.N
        split = project(f_rho, hs)
        self.alpha_pi = split.alpha_pi
        self.tail = split.tail_energy
        self.lam = hs.lam

    def alpha(self, gamma: float) -> np.ndarray:
        if gamma == 0:
            a, *_ = linalg.lstsq(self.Phi, self.d.ys, cond=PINV_RCOND)
            return a
        A = self.G.copy()
        A[np.diag_indices_from(A)] += gamma / self.lam
        return linalg.cho_solve(linalg.cho_factor(A), self.b)

    def errors(self, gamma: float):
        return true_errors_coeffs(self.alpha(gamma), self.lam, self.alpha_pi, self.tail, gamma)


def oracle_gamma(hs: HypothesisSpace, f_rho: SpectralFunction, d: Dataset, grid: Sequence[float]) -> float:
    """Grid value minimizing the true overall error; ties go to the smaller gamma."""
    grid = sorted(float(g) for g in grid)
    if not grid:
        raise ValueError("empty gamma grid")
    p = _Problem(hs, f_rho, d)
    return _oracle(p, grid)[0]


def _oracle(p: _Problem, grid: Sequence[float]) -> tuple[float, float]:
    best_g, best_e = None, math.inf
    for g in sorted(grid):
        e = p.errors(g).overall
        if e < best_e:
            best_g, best_e = g, e
    return best_g, best_e


def sup_abs(f: SpectralFunction, points: int = SUP_GRID_POINTS) -> float:
    xs = np.linspace(-f.X / 2, f.X / 2, points)
    return float(np.max(np.abs(eval_function(f, xs))))


def _setup(cfg: ExperimentConfig, run_index: int):
    rng = np.random.default_rng([cfg.seed, run_index])
    f_rho, hs = gen_regression_function(cfg, rng)
    N = draw_N(cfg, hs, rng)
    d = gen_dataset(f_rho, cfg, N, rng)
    sigma = d.meta["noise_std"]
    ctx = BoundContext.from_truth(hs, f_rho, sigma, N, cfg.delta)
    return rng, f_rho, hs, d, sigma, ctx


def _rel(bound: float, true: float) -> float:
    return (bound - true) / true if true > 0 else math.nan


# --- per-run bodies ----------------------------------------------------------

def _run_sz(cfg: ExperimentConfig, i: int) -> list[dict]:
    _, f_rho, hs, d, sigma, ctx = _setup(cfg, i)
    p = _Problem(hs, f_rho, d)
    g = sz_min_gamma(ctx)
    te = p.errors(g)
    t1 = sample_bound_theorem1(ctx, g)
    rec = {
        "run_index": i, "N": d.N, "lambda": float(hs.lam[0]), "gamma": g,
        "true_sample_error": te.sample, "true_approx_error": te.approx, "true_overall_error": te.overall,
        "theorem1_bound": t1, "reldiff_theorem1": _rel(t1, te.sample),
        "theorem1_violated": float(te.sample > t1),
        "approx_bound_a": approx_bound_a(ctx, g), "approx_bound_b": approx_bound_b(ctx, g),
    }
    if cfg.noise == "uniform":
        M = sup_abs(f_rho) + sigma * math.sqrt(3.0)
        sz = sz_bound(ctx, M, g)
        rec.update(sz_bound=sz, reldiff_sz=_rel(sz, te.sample), M_realized=M, crossover_M=sz_crossover_M(ctx, g))
    else:  # |y| is unbounded under Gaussian noise
        rec.update(sz_bound=math.nan, reldiff_sz=math.nan, M_realized=math.nan, crossover_M=sz_crossover_M(ctx, g))
    if cfg.name == "lgz_compare":
        lgz = lgz_bound(ctx, hs, g, te.approx, sigma**2)
        rec.update(lgz_expectation=lgz.expectation, lgz_bound=lgz.probability_bound_at_delta,
                   reldiff_lgz=_rel(lgz.probability_bound_at_delta, te.sample))
    return [rec]


def _run_tradeoff(cfg: ExperimentConfig, i: int) -> list[dict]:
    _, f_rho, hs, d, sigma, ctx = _setup(cfg, i)
    p = _Problem(hs, f_rho, d)
    nan = math.nan
    gha = gamma_hat_a(ctx)
    ghb = gamma_hat_b(ctx)
    rec = {
        "run_index": i, "N": d.N, "lambda": float(hs.lam[0]),
        "A": sample_constant(ctx), "B": ctx.alpha_l2, "condition_a_met": float(gha.condition_met),
        "gamma_hat_a": gha.gamma if gha.condition_met else nan, "gamma_hat_b": ghb,
    }
    for tag, g, approx_fn in (("a", gha.gamma if gha.condition_met else None, approx_bound_a), ("b", ghb, approx_bound_b)):
        if g is None:
            rec.update({f"true_sample_{tag}": nan, f"bound_sample_{tag}": nan,
                        f"true_approx_{tag}": nan, f"bound_approx_{tag}": nan, f"true_overall_{tag}": nan})
            continue
        te = p.errors(g)
        rec.update({
            f"true_sample_{tag}": te.sample, f"bound_sample_{tag}": sample_bound_theorem1(ctx, g),
            f"true_approx_{tag}": te.approx, f"bound_approx_{tag}": approx_fn(ctx, g),
            f"true_overall_{tag}": te.overall,
        })
    gs, es = _oracle(p, cfg.gamma_grid.values())
    rec.update(gamma_star=gs, true_overall_star=es)
    return [rec]


def _run_wz(cfg: ExperimentConfig, i: int) -> list[dict]:
    _, f_rho, hs, d, sigma, ctx = _setup(cfg, i)
    p = _Problem(hs, f_rho, d)
    B_inf = sup_abs(f_rho)
    out = []
    for eps in cfg.eps_grid:
        g = wz_gamma(d.N, eps)
        te = p.errors(g)
        t1 = sample_bound_theorem1(ctx, g)
        lw = wz_log_bound(wz_constants(ctx, hs, B_inf, eps), d.N, ctx.delta)
        out.append({
            "run_index": i, "eps": float(eps), "N": d.N, "lambda": float(hs.lam[0]), "gamma": g,
            "true_sample_error": te.sample, "true_approx_error": te.approx, "true_overall_error": te.overall,
            "theorem1_bound": t1, "wz_log_bound": lw,
            "wz_bound": math.exp(lw) if lw < 709.0 else math.inf,
            "logreldiff_theorem1": log_relative_difference(t1, te.sample),
            "logreldiff_wz": log_relative_difference_from_log(lw, te.sample),
        })
    return out


def _gibbs_gamma(p: _Problem, sigma2: float, gcfg: GibbsConfig) -> float:
    trace = gibbs_run(p.hs, p.d, gcfg, sigma2=sigma2)
    return gamma_hat_gibbs(trace, gcfg)


def _run_reg_benefit(cfg: ExperimentConfig, i: int) -> list[dict]:
    _, f_rho, hs, d, sigma, ctx = _setup(cfg, i)
    p = _Problem(hs, f_rho, d)
    gb = gamma_hat_b(ctx)
    try:
        gh = _gibbs_gamma(p, sigma**2, cfg.gibbs_config([cfg.seed, i, 1]))
    except DegenerateError:
        gh = math.nan
    gs, es = _oracle(p, cfg.gamma_grid.values())
    e_b = p.errors(gb).overall
    e_0 = p.errors(0.0).overall
    e_h = p.errors(gh).overall if math.isfinite(gh) else math.nan
    excluded = es < EXCLUDE_BELOW
    rel = (lambda e: math.nan if excluded else (e - es) / es)
    return [{
        "run_index": i, "N": d.N, "E": hs.E, "lambda": float(hs.lam[0]),
        "gamma_b": gb, "gamma_gibbs": gh, "gamma_star": gs,
        "err_b": e_b, "err_zero": e_0, "err_gibbs": e_h, "err_star": es,
        "reldisc_b": rel(e_b), "reldisc_zero": rel(e_0), "reldisc_gibbs": rel(e_h),
        "zero_vs_gibbs": (e_0 - e_h) / e_h if e_h > 0 else math.nan,
        "gibbs_beats_zero": float(e_h < e_0) if math.isfinite(e_h) else math.nan,
        "excluded": float(excluded),
    }]


_BODIES = {
    "sz_compare": _run_sz,
    "lgz_compare": _run_sz,
    "tradeoff": _run_tradeoff,
    "wz_compare": _run_wz,
    "reg_benefit": _run_reg_benefit,
}


# --- orchestration -----------------------------------------------------------

class SummaryStats(NamedTuple):
    count: int
    mean: float
    std: float
    median: float
    q25: float
    q75: float
    min: float
    max: float


def summarize(records: Sequence[dict], column: str) -> SummaryStats:
    """Statistics over the non-NaN entries of one column (std uses N - 1)."""
    if not records:
        raise ValueError("no records to summarize")
    v = np.array([r[column] for r in records], dtype=float)
    v = v[~np.isnan(v)]
    if v.size == 0:
        nan = math.nan
        return SummaryStats(0, nan, nan, nan, nan, nan, nan, nan)
    with np.errstate(invalid="ignore", over="ignore"):
        std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
        q25, med, q75 = (float(x) for x in np.percentile(v, [25, 50, 75]))
        mean = float(np.mean(v))
    return SummaryStats(int(v.size), mean, std, med, q25, q75, float(v.min()), float(v.max()))


def worker_count(default: Optional[int] = None) -> int:
    env = os.environ.get("TRIGREG_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise SchemaError(f"TRIGREG_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    if default is not None:
        return max(1, default)
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1))


def _body_star(args):
    cfg, i = args
    return _BODIES[cfg.name](cfg, i)


def run_records(cfg: ExperimentConfig, workers: Optional[int] = None) -> list[dict]:
    n = min(worker_count(workers), cfg.runs)
    jobs = [(cfg, i) for i in range(cfg.runs)]
    if n == 1:
        chunks = [_body_star(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n) as ex:
            chunks = list(ex.map(_body_star, jobs, chunksize=max(1, cfg.runs // (4 * n))))
    return [r for c in chunks for r in c]


def build_summary(cfg: ExperimentConfig, records: list[dict]) -> dict:
    cols = [c for c in records[0] if c != "run_index"]
    out = {
        "experiment": cfg.name,
        "seed": cfg.seed,
        "config": cfg.to_dict(),
        "runs": cfg.runs,
        "columns": {c: summarize(records, c)._asdict() for c in cols},
    }
    if cfg.name == "wz_compare":
        groups = {}
        for eps in cfg.eps_grid:
            sub = [r for r in records if r["eps"] == float(eps)]
            groups[repr(float(eps))] = {c: summarize(sub, c)._asdict() for c in cols if c != "eps"}
        out["by_eps"] = groups
    if cfg.name == "reg_benefit":
        out["excluded_runs"] = int(sum(r["excluded"] for r in records))
    return out


def _run(expected: tuple[str, ...], cfg: ExperimentConfig, workers: Optional[int]):
    if cfg.name not in expected:
        raise SchemaError(f"config is for {cfg.name!r}, expected one of {list(expected)}")
    recs = run_records(cfg, workers)
    return recs, build_summary(cfg, recs)


def run_sz_compare(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(("sz_compare",), cfg, workers)


def run_lgz_compare(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(("lgz_compare",), cfg, workers)


def run_tradeoff(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(("tradeoff",), cfg, workers)


def run_wz_compare(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(("wz_compare",), cfg, workers)


def run_reg_benefit(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(("reg_benefit",), cfg, workers)


def run_experiment(cfg: ExperimentConfig, workers: Optional[int] = None):
    return _run(EXPERIMENTS, cfg, workers)
