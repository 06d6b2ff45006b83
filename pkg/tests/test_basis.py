import math

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.integrate import simpson

from trigreg.basis import (
    Frequency,
    HypothesisSpace,
    Parity,
    ck_numeric,
    ck_paper,
    eval_features,
    feature_matrix,
    kernel_eval,
    kernel_matrix,
    lambda_min,
)
from trigreg.errors import DomainError, SchemaError

from helpers import random_space, spaces

R2 = math.sqrt(2)


def unit_pair(X=2.0, lam=(1.0, 1.0)):
    return HypothesisSpace(X, (1,), lam)


class TestFeatures:
    def test_origin(self):
        assert np.allclose(eval_features(unit_pair(), 0.0), [0.0, R2])

    def test_quarter_period(self):
        assert np.allclose(eval_features(unit_pair(), 0.5), [R2, 0.0], atol=1e-15)

    def test_two_pairs_against_scalar_trig(self):
        hs = HypothesisSpace.uniform(2 * math.pi, (2, 5), 1.0)
        x = math.pi / 4
        expect = [R2 * math.sin(2 * x), R2 * math.sin(5 * x), R2 * math.cos(2 * x), R2 * math.cos(5 * x)]
        assert np.allclose(eval_features(hs, x), expect, rtol=0, atol=1e-14)

    def test_domain_rejected(self):
        with pytest.raises(DomainError):
            eval_features(unit_pair(), 1.01)

    def test_domain_edge_tolerance(self):
        eval_features(unit_pair(), 1.0 + 1e-13)
        with pytest.raises(DomainError):
            eval_features(unit_pair(), 1.0 + 1e-10)

    @given(spaces())
    @settings(max_examples=50, deadline=None)
    def test_feature_magnitude(self, hs):
        xs = np.linspace(-hs.X / 2, hs.X / 2, 101)
        assert np.all(np.abs(feature_matrix(hs, xs)) <= R2 + 1e-12)


class TestKernel:
    def test_diagonal_value(self):
        assert kernel_eval(unit_pair(), 0.0, 0.0) == pytest.approx(2.0)

    def test_orthogonal_points(self):
        assert kernel_eval(unit_pair(), 0.0, 0.5) == pytest.approx(0.0, abs=1e-15)

    @given(spaces())
    @settings(max_examples=50, deadline=None)
    def test_symmetric_and_psd(self, hs):
        xs = np.linspace(-hs.X / 2, hs.X / 2, 37)
        K = kernel_matrix(hs, xs)
        assert np.allclose(K, K.T, atol=1e-12 * (1 + np.abs(K).max()))
        assert np.all(np.diag(K) >= 0)
        assert np.linalg.eigvalsh(K).min() >= -1e-9 * max(1.0, np.abs(K).max())

    def test_mercer_trace_identity(self, rng):
        for _ in range(5):
            hs = random_space(rng, max_pairs=4, max_q=8)
            x = np.linspace(-hs.X / 2, hs.X / 2, 801)
            K = kernel_matrix(hs, x)
            inner = simpson(K**2, x=x, axis=1) / hs.X
            total = simpson(inner, x=x) / hs.X
            assert total == pytest.approx(float(np.sum(hs.lam**2)), rel=1e-6)


class TestConstants:
    def test_ck_single_pair(self):
        assert ck_paper(unit_pair()) == 1.0

    def test_ck_mixed_weights(self):
        hs = HypothesisSpace(1.0, (1, 2), (1.0, 4.0, 9.0, 16.0))
        assert ck_paper(hs) == pytest.approx(5.0)

    def test_ck_uniform(self):
        hs = HypothesisSpace.uniform(3.0, (1, 4, 7), 2.5)
        assert ck_paper(hs) == pytest.approx(math.sqrt(2.5 * 6 / 2))

    def test_ck_numeric_constant_diagonal(self):
        assert ck_numeric(unit_pair()) == pytest.approx(R2)

    def test_ck_numeric_unequal_weights(self):
        assert ck_numeric(unit_pair(lam=(1.0, 0.25)), grid_points=10001) == pytest.approx(R2, rel=1e-12)

    def test_ck_numeric_grid_minimum(self):
        with pytest.raises(ValueError):
            ck_numeric(unit_pair(), grid_points=99)

    @given(spaces())
    @settings(max_examples=40, deadline=None)
    def test_ck_numeric_within_sqrt2_of_closed_form(self, hs):
        assert ck_numeric(hs, grid_points=500) <= R2 * ck_paper(hs) * (1 + 1e-12)

    def test_ck_numeric_dominates_off_diagonal(self, rng):
        hs = random_space(rng)
        xs = rng.uniform(-hs.X / 2, hs.X / 2, 60)
        K = kernel_matrix(hs, xs)
        assert np.sqrt(np.abs(K).max()) <= ck_numeric(hs) * (1 + 1e-9)

    @pytest.mark.parametrize(
        "lams,expect", [((1.0, 4.0, 9.0, 16.0), 1.0), ((3.0,) * 4, 3.0), ((0.3, 0.2, 0.7, 0.9), 0.2)]
    )
    def test_lambda_min(self, lams, expect):
        assert lambda_min(HypothesisSpace(1.0, (1, 2), lams)) == expect


def test_orthonormality_by_quadrature(rng):
    for _ in range(5):
        hs = random_space(rng)
        x = np.linspace(-hs.X / 2, hs.X / 2, 10_001)
        Phi = feature_matrix(hs, x)
        G = simpson(Phi[:, :, None] * Phi[:, None, :], x=x, axis=0) / hs.X
        assert np.abs(G - np.eye(hs.E)).max() < 1e-8


class TestSchema:
    def test_odd_E(self):
        with pytest.raises(SchemaError, match="even"):
            HypothesisSpace(1.0, (1,), (1.0, 1.0, 1.0))

    def test_duplicate_Q(self):
        with pytest.raises(SchemaError, match="duplicate"):
            HypothesisSpace(1.0, (2, 2), (1.0,) * 4)

    def test_nonpositive_lambda(self):
        with pytest.raises(SchemaError):
            HypothesisSpace(1.0, (1,), (1.0, 0.0))

    def test_frequency_must_be_positive(self):
        with pytest.raises(ValueError):
            Frequency(0, Parity.SIN)

    @given(spaces())
    @settings(max_examples=50, deadline=None)
    def test_round_trip(self, hs):
        assert HypothesisSpace.from_dict(hs.to_dict()) == hs

    def test_unknown_key(self):
        with pytest.raises(SchemaError, match="unknown"):
            HypothesisSpace.from_dict({"X": 1.0, "Q": [1], "lambdas": [1.0, 1.0], "extra": 1})

    def test_feature_order(self):
        hs = HypothesisSpace.uniform(1.0, (3, 1), 1.0)
        assert hs.features() == [
            Frequency(3, Parity.SIN), Frequency(1, Parity.SIN), Frequency(3, Parity.COS), Frequency(1, Parity.COS)
        ]
