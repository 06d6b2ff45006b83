import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import simpson

from trigreg.basis import Frequency, HypothesisSpace, Parity
from trigreg.errors import DomainError, MembershipError, RangeError, SchemaError
from trigreg.functions import (
    SpectralFunction,
    eval_function,
    h_norm,
    integral_operator_power,
    l2_norm,
    project,
    sup_norm_numeric,
)

from helpers import functions_on, random_function, spaces

S = Parity.SIN
C = Parity.COS
R2 = math.sqrt(2)


def fn(X=2.0, **terms):
    """fn(sin1=3, cos2=4) -> {sin q=1: 3, cos q=2: 4}."""
    coeffs = {}
    for k, v in terms.items():
        coeffs[Frequency(int(k[3:]), S if k.startswith("sin") else C)] = v
    return SpectralFunction(X, coeffs)


class TestEval:
    def test_single_sine(self):
        assert eval_function(fn(sin1=3.0), 0.5) == pytest.approx(3 * R2)

    def test_zero(self):
        assert eval_function(SpectralFunction.zero(2.0), 0.3) == 0.0

    def test_sin_plus_cos_at_origin(self):
        assert eval_function(fn(sin1=1.0, cos1=1.0), 0.0) == pytest.approx(R2)

    def test_out_of_domain(self):
        with pytest.raises(DomainError):
            eval_function(fn(sin1=1.0), 3.0)

    def test_vectorized_matches_scalar(self, rng):
        f = random_function(rng, 7.0)
        xs = rng.uniform(-3.5, 3.5, 25)
        assert np.allclose(eval_function(f, xs), [eval_function(f, x) for x in xs])


class TestNorms:
    def test_pythagorean(self):
        assert l2_norm(fn(sin1=3.0, cos7=4.0)) == pytest.approx(5.0)

    def test_zero(self):
        assert l2_norm(SpectralFunction.zero(1.0)) == 0.0

    def test_parseval_against_quadrature(self, rng):
        for n_terms in (20, 30):
            f = random_function(rng, 10.0, n_terms=n_terms)
            x = np.linspace(-5, 5, 100_001)
            integral = simpson(eval_function(f, x) ** 2, x=x) / 10.0
            assert integral == pytest.approx(l2_norm(f) ** 2, rel=1e-6)

    def test_h_norm_unit_weight(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 1.0)
        assert h_norm(fn(sin1=3.0), hs) == pytest.approx(3.0)

    def test_h_norm_scaled_weight(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 9.0)
        assert h_norm(fn(sin1=3.0), hs) == pytest.approx(1.0)

    def test_h_norm_membership(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 1.0)
        with pytest.raises(MembershipError):
            h_norm(fn(sin2=1.0), hs)


class TestProjection:
    def test_split(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 1.0)
        p = project(fn(sin1=3.0, cos2=4.0), hs)
        assert list(p.alpha_pi) == [3.0, 0.0]
        assert p.tail_energy == pytest.approx(4.0)

    def test_inside(self):
        hs = HypothesisSpace.uniform(2.0, (1, 2), 1.0)
        assert project(fn(sin1=3.0, cos2=4.0), hs).tail_energy == 0.0

    def test_outside(self):
        hs = HypothesisSpace.uniform(2.0, (5,), 1.0)
        f = fn(sin1=3.0, cos2=4.0)
        p = project(f, hs)
        assert np.all(p.alpha_pi == 0) and p.tail_energy == pytest.approx(l2_norm(f))

    @given(spaces(max_q=20), st.data())
    @settings(max_examples=60, deadline=None)
    def test_energy_preserving(self, hs, data):
        f = data.draw(functions_on(hs.X, max_q=20))
        p = project(f, hs)
        assert float(np.sum(p.alpha_pi**2)) + p.tail_energy**2 == pytest.approx(l2_norm(f) ** 2, rel=1e-12, abs=1e-12)


class TestOperatorPower:
    def test_first_power(self):
        hs = HypothesisSpace(2.0, (1,), (2.0, 1.0))
        g = integral_operator_power(fn(sin1=3.0), hs, 1.0)
        assert g.coeffs[Frequency(1, S)] == pytest.approx(6.0)

    def test_negative_half(self):
        hs = HypothesisSpace(2.0, (1,), (4.0, 1.0))
        g = integral_operator_power(fn(sin1=2.0), hs, -0.5)
        assert g.coeffs[Frequency(1, S)] == pytest.approx(1.0)

    def test_identity(self):
        hs = HypothesisSpace(2.0, (1, 3), (4.0, 1.0, 2.0, 0.5))
        f = fn(sin1=2.0, cos3=-1.0)
        assert integral_operator_power(f, hs, 0.0) == f

    def test_tail_annihilated(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 2.0)
        g = integral_operator_power(fn(sin1=1.0, cos4=5.0), hs, 0.5)
        assert set(g.coeffs) == {Frequency(1, S)}

    def test_negative_power_with_tail(self):
        hs = HypothesisSpace.uniform(2.0, (1,), 1.0)
        with pytest.raises(RangeError):
            integral_operator_power(fn(sin1=1.0, cos2=1.0), hs, -1.0)

    @given(spaces(), st.floats(-2, 2), st.floats(-2, 2), st.data())
    @settings(max_examples=60, deadline=None)
    def test_composition(self, hs, a, b, data):
        alpha = np.array(data.draw(st.lists(st.floats(-5, 5), min_size=hs.E, max_size=hs.E)))
        f = SpectralFunction.from_space(hs, alpha)
        lhs = project(integral_operator_power(integral_operator_power(f, hs, b), hs, a), hs).alpha_pi
        rhs = project(integral_operator_power(f, hs, a + b), hs).alpha_pi
        assert np.allclose(lhs, rhs, rtol=1e-9, atol=1e-12)

    @given(spaces(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_h_norm_identity(self, hs, data):
        alpha = np.array(data.draw(st.lists(st.floats(-5, 5), min_size=hs.E, max_size=hs.E)))
        f = SpectralFunction.from_space(hs, alpha)
        lhs = h_norm(f, hs) ** 2
        rhs = l2_norm(integral_operator_power(f, hs, -0.5)) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


class TestSupNorm:
    def test_single_feature(self):
        s = sup_norm_numeric(fn(sin1=1.0), grid_points=10_001)
        assert s.grid_max == pytest.approx(R2, rel=1e-9) and s.analytic_bound == pytest.approx(R2)

    def test_zero(self):
        assert sup_norm_numeric(SpectralFunction.zero(1.0)).grid_max == 0.0

    def test_pair_amplitude(self):
        s = sup_norm_numeric(fn(sin1=1.0, cos1=1.0), grid_points=100_000)
        assert s.grid_max == pytest.approx(2.0, rel=1e-6)
        assert s.analytic_bound == pytest.approx(2 * R2)

    def test_grid_minimum(self):
        with pytest.raises(ValueError):
            sup_norm_numeric(fn(sin1=1.0), grid_points=999)


class TestAlgebraAndSchema:
    def test_add_sub(self):
        f, g = fn(sin1=1.0, cos2=2.0), fn(sin1=0.5, sin3=1.0)
        assert (f + g - g) == f
        assert (f - f).coeffs == {}

    def test_domain_mismatch(self):
        with pytest.raises(ValueError):
            fn(X=1.0, sin1=1.0) + fn(X=2.0, sin1=1.0)

    @given(functions_on(3.0))
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, f):
        assert SpectralFunction.from_dict(f.to_dict()) == f

    def test_duplicate_terms(self):
        d = {"X": 1.0, "terms": [{"q": 1, "parity": "sin", "coeff": 1.0}, {"q": 1, "parity": "sin", "coeff": 2.0}]}
        with pytest.raises(SchemaError, match="duplicate"):
            SpectralFunction.from_dict(d)

    def test_bad_parity(self):
        with pytest.raises(SchemaError):
            SpectralFunction.from_dict({"X": 1.0, "terms": [{"q": 1, "parity": "tan", "coeff": 1.0}]})
