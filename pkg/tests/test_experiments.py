import json
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigreg.basis import HypothesisSpace
from trigreg.bounds import approx_bound_a, approx_bound_b, sample_bound_theorem1
from trigreg.errors import SchemaError
from trigreg.estimator import Dataset
from trigreg.experiments import (
    ExperimentConfig,
    _setup,
    draw_N,
    gen_dataset,
    gen_regression_function,
    noise_std,
    oracle_gamma,
    run_experiment,
    run_records,
    summarize,
    worker_count,
)
from trigreg.functions import SpectralFunction, eval_function, l2_norm, project
from trigreg.storage import records_to_csv

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def base(name="sz_compare", **over):
    d = json.loads((CONFIGS / f"{name}.json").read_text())
    d.update(over)
    return d


def cfg(name="sz_compare", **over):
    return ExperimentConfig.from_dict(base(name, **over))


class TestConfig:
    @pytest.mark.parametrize("name", ["sz_compare", "lgz_compare", "tradeoff", "wz_compare", "reg_benefit"])
    def test_shipped_configs_round_trip(self, name):
        c = cfg(name)
        assert ExperimentConfig.from_dict(c.to_dict()) == c

    @pytest.mark.parametrize(
        "over, key",
        [
            ({"E_spec": {"kind": "fixed", "value": 21}}, "E_spec"),
            ({"runs": 0}, "runs"),
            ({"runs": 2.0}, "runs"),
            ({"n_pairs": 31}, "n_pairs"),
            ({"E_spec": {"kind": "fixed", "value": 42}}, "E_spec"),
            ({"noise": "laplace"}, "noise"),
            ({"delta": 1.0}, "delta"),
            ({"lambda_spec": {"kind": "uniform", "lo": 3.0}}, "lambda_spec"),
            ({"N_spec": {"kind": "range", "lo": 10, "hi": 5, "step": 1}}, "N_spec"),
            ({"bogus": 1}, "bogus"),
            ({"eps_grid": [0.5]}, "eps_grid"),
        ],
    )
    def test_schema_errors_name_the_key(self, over, key):
        with pytest.raises(SchemaError, match=key):
            cfg(**over)

    def test_missing_key(self):
        d = base()
        del d["snr"]
        with pytest.raises(SchemaError, match="snr"):
            ExperimentConfig.from_dict(d)

    def test_tradeoff_needs_grid(self):
        d = base("tradeoff")
        del d["gamma_grid"]
        with pytest.raises(SchemaError, match="gamma_grid"):
            ExperimentConfig.from_dict(d)

    def test_with_seed(self):
        c = cfg()
        assert c.with_seed(7).seed == 7 and c.with_seed(7).runs == c.runs


class TestGenerators:
    def test_determinism(self):
        c = cfg()
        f1, h1 = gen_regression_function(c, np.random.default_rng(5))
        f2, h2 = gen_regression_function(c, np.random.default_rng(5))
        assert f1 == f2 and h1 == h2

    def test_space_inside_function(self, rng):
        c = cfg()
        f, hs = gen_regression_function(c, rng)
        assert len(f.coeffs) == 2 * c.n_pairs and hs.E == 20
        assert set(hs.features()) <= set(f.coeffs)
        assert project(f, hs).tail_energy > 0

    def test_full_cover_no_tail(self, rng):
        c = cfg(n_pairs=10)
        f, hs = gen_regression_function(c, rng)
        assert project(f, hs).tail_energy == pytest.approx(0.0, abs=1e-12)

    def test_uniform_lambda_mean(self):
        c = cfg()
        lams = [gen_regression_function(c, np.random.default_rng([c.seed, i]))[1].lam[0] for i in range(500)]
        assert 2.2 <= np.mean(lams) <= 2.8
        assert min(lams) > 0 and max(lams) < 5

    def test_uniform_noise_variance(self, rng):
        c = cfg(snr=10.0)
        f, _ = gen_regression_function(c, rng)
        d = gen_dataset(f, c, 1_000_000, rng)
        e = d.ys - eval_function(f, d.xs)
        s2 = d.meta["noise_std"] ** 2
        assert np.var(e) == pytest.approx(s2, rel=0.01)
        assert np.max(np.abs(e)) <= math.sqrt(3 * s2)

    @pytest.mark.parametrize("noise", ["uniform", "gaussian"])
    def test_empirical_snr(self, noise, rng):
        c = cfg(noise=noise, snr=150.0, X=50.0)
        f, _ = gen_regression_function(c, rng)
        d = gen_dataset(f, c, 100_000, rng)
        fx = eval_function(f, d.xs)
        assert np.var(fx) / np.var(d.ys - fx) == pytest.approx(150.0, rel=0.05)

    def test_snr_infinity_limit(self, rng):
        c = cfg(snr=1e300)
        f, _ = gen_regression_function(c, rng)
        d = gen_dataset(f, c, 50, rng)
        assert np.allclose(d.ys, eval_function(f, d.xs), atol=1e-12)

    def test_noise_std(self):
        from trigreg.basis import Frequency, Parity

        f = SpectralFunction(2.0, {Frequency(1, Parity.SIN): 3.0, Frequency(2, Parity.COS): 4.0})
        assert noise_std(f, 25.0) == pytest.approx(l2_norm(f) / 5.0)

    def test_domain(self, rng):
        c = cfg()
        f, _ = gen_regression_function(c, rng)
        d = gen_dataset(f, c, 1000, rng)
        assert np.all(np.abs(d.xs) <= c.X / 2)

    def test_draw_N_specs(self, rng):
        c = cfg("wz_compare")
        _, hs = gen_regression_function(c, rng)
        ns = {draw_N(c, hs, rng) for _ in range(300)}
        assert all(300 <= n <= 6990 and (n - 300) % 15 == 0 for n in ns)
        c = cfg("reg_benefit")
        for _ in range(50):
            _, hs = gen_regression_function(c, rng)
            n = draw_N(c, hs, rng)
            assert 5 <= n <= max(5, hs.E // 2)


class TestOracleGamma:
    def setup_method(self):
        self.hs = HypothesisSpace.uniform(10.0, (1, 2), 1.0)
        r = np.random.default_rng(0)
        self.f = SpectralFunction(10.0, dict(zip(self.hs.features(), r.normal(size=4))))
        xs = r.uniform(-5, 5, 40)
        self.clean = Dataset(xs, eval_function(self.f, xs))
        self.noisy = Dataset(xs, self.clean.ys + r.normal(0, 2.0, 40))

    def test_single_point(self):
        assert oracle_gamma(self.hs, self.f, self.noisy, [3.3]) == 3.3

    def test_noiseless_picks_smallest(self):
        assert oracle_gamma(self.hs, self.f, self.clean, np.logspace(-3, 2, 20)) == pytest.approx(1e-3)

    def test_tie_goes_to_smaller(self):
        assert oracle_gamma(self.hs, self.f, self.noisy, [0.7, 0.7]) == 0.7

    def test_empty(self):
        with pytest.raises(ValueError):
            oracle_gamma(self.hs, self.f, self.noisy, [])


class TestSummarize:
    def test_small(self):
        s = summarize([{"a": 1.0}, {"a": 2.0}, {"a": 3.0}], "a")
        assert (s.mean, s.median, s.std) == (2.0, 2.0, 1.0)

    def test_constant(self):
        s = summarize([{"a": 4.0}] * 5, "a")
        assert s.std == 0 and s.min == s.max == 4.0

    def test_normal(self, rng):
        s = summarize([{"a": v} for v in rng.standard_normal(10_000)], "a")
        assert abs(s.mean) < 0.05 and 0.95 <= s.std <= 1.05

    def test_nan_dropped(self):
        s = summarize([{"a": 1.0}, {"a": math.nan}, {"a": 3.0}], "a")
        assert s.count == 2 and s.mean == 2.0

    @given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=50))
    @settings(max_examples=50, deadline=None)
    def test_quartile_order(self, vals):
        s = summarize([{"a": v} for v in vals], "a")
        assert s.min <= s.q25 <= s.median <= s.q75 <= s.max


class TestWorkers:
    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("TRIGREG_THREADS", "3")
        assert worker_count() == 3
        monkeypatch.setenv("TRIGREG_THREADS", "x")
        with pytest.raises(SchemaError):
            worker_count()

    @pytest.mark.parametrize("name", ["sz_compare", "wz_compare"])
    def test_worker_count_does_not_change_output(self, name, monkeypatch):
        monkeypatch.delenv("TRIGREG_THREADS", raising=False)
        c = cfg(name, runs=6)
        a = records_to_csv(run_records(c, workers=1))
        b = records_to_csv(run_records(c, workers=3))
        assert a == b
        assert [r["run_index"] for r in run_records(c, workers=2)][:: len(c.eps_grid or [0])] == list(range(6))


def _check_record_invariants(recs, c):
    for r in recs:
        for k, v in r.items():
            if k.startswith(("true_", "err_")) and not math.isnan(v):
                assert v >= 0, k
        for suf in ("", "_a", "_b"):
            s, a, o = (r.get(f"true_sample{'_error' if not suf else suf}"),
                       r.get(f"true_approx{'_error' if not suf else suf}"),
                       r.get(f"true_overall{'_error' if not suf else suf}"))
            if None not in (s, a, o) and not math.isnan(o):
                assert o <= s + a + 1e-9


@pytest.mark.parametrize("name", ["sz_compare", "lgz_compare", "tradeoff", "wz_compare", "reg_benefit"])
def test_record_invariants(name, monkeypatch):
    monkeypatch.setenv("TRIGREG_THREADS", "1")
    c = cfg(name, runs=8)
    recs, summary = run_experiment(c)
    _check_record_invariants(recs, c)
    assert summary["seed"] == c.seed and summary["config"] == c.to_dict()
    for col, s in summary["columns"].items():
        if s["count"]:
            assert s["q25"] <= s["median"] <= s["q75"], col


@pytest.mark.parametrize("name", ["sz_compare", "tradeoff", "wz_compare", "reg_benefit"])
def test_bound_invariants_per_run(name):
    c = cfg(name, runs=10)
    for i in range(c.runs):
        _, f, hs, d, sigma, ctx = _setup(c, i)
        for g in (1e-3, 0.1, 1.0, 10.0):
            assert sample_bound_theorem1(ctx, g) >= 0
            a, b = approx_bound_a(ctx, g), approx_bound_b(ctx, g)
            assert a >= ctx.tail_energy - 1e-12 and b >= ctx.tail_energy - 1e-12
            assert b >= a - 1e-9 * abs(a)


def test_theorem1_coverage(monkeypatch):
    monkeypatch.setenv("TRIGREG_THREADS", "1")
    recs = run_records(cfg(runs=200))
    assert np.mean([r["theorem1_violated"] for r in recs]) <= 0.1
