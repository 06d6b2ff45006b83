"""Functions written exactly in the orthonormal trigonometric basis.

A :class:`SpectralFunction` is a sparse map ``Frequency -> coefficient``.  Norms
follow from Parseval, so no quadrature is involved anywhere in this module
except :func:`sup_norm_numeric`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

import numpy as np

from .basis import SQRT2, Frequency, HypothesisSpace, Parity, check_domain
from .errors import MembershipError, RangeError, SchemaError


@dataclass(frozen=True)
class SpectralFunction:
    X: float
    coeffs: Mapping[Frequency, float] = field(default_factory=dict)

    def __post_init__(self):
        if not (float(self.X) > 0):
            raise ValueError("X must be positive")
        clean = {}
        for k, v in dict(self.coeffs).items():
            if not isinstance(k, Frequency):
                k = Frequency(*k)
            v = float(v)
            if v != 0.0:
                clean[k] = v
        object.__setattr__(self, "X", float(self.X))
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_space(cls, hs: HypothesisSpace, alpha) -> "SpectralFunction":
        """Map a coefficient vector in feature order back onto (frequency, parity)."""
        alpha = np.asarray(alpha, dtype=float)
        if alpha.shape != (hs.E,):
            raise ValueError(f"expected {hs.E} coefficients, got shape {alpha.shape}")
        return cls(hs.X, dict(zip(hs.features(), alpha.tolist())))

    @classmethod
    def zero(cls, X: float) -> "SpectralFunction":
        return cls(X, {})

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(q, is_sin, coeff) arrays over the nonzero terms."""
        keys = list(self.coeffs)
        q = np.array([k.q for k in keys], dtype=float)
        is_sin = np.array([k.parity is Parity.SIN for k in keys], dtype=bool)
        c = np.array([self.coeffs[k] for k in keys], dtype=float)
        return q, is_sin, c

    def _check_same_domain(self, other: "SpectralFunction"):
        if not math.isclose(self.X, other.X, rel_tol=1e-12):
            raise ValueError(f"domain mismatch: X={self.X} vs X={other.X}")

    def __add__(self, other: "SpectralFunction") -> "SpectralFunction":
        self._check_same_domain(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0.0) + v
        return SpectralFunction(self.X, out)

    def __sub__(self, other: "SpectralFunction") -> "SpectralFunction":
        return self + other.scale(-1.0)

    def scale(self, c: float) -> "SpectralFunction":
        return SpectralFunction(self.X, {k: c * v for k, v in self.coeffs.items()})

    def __call__(self, x):
        return eval_function(self, x)

    def to_dict(self) -> dict:
        return {
            "X": self.X,
            "terms": [{"q": k.q, "parity": k.parity.value, "coeff": v} for k, v in self.coeffs.items()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SpectralFunction":
        if set(d) != {"X", "terms"}:
            raise SchemaError(f"spectral function needs exactly keys X, terms; got {sorted(d)}")
        coeffs = {}
        for i, t in enumerate(d["terms"]):
            if set(t) != {"q", "parity", "coeff"}:
                raise SchemaError(f"terms[{i}]: expected keys q, parity, coeff")
            if t["parity"] not in ("sin", "cos"):
                raise SchemaError(f"terms[{i}].parity must be 'sin' or 'cos'")
            k = Frequency(t["q"], Parity(t["parity"]))
            if k in coeffs:
                raise SchemaError(f"terms[{i}]: duplicate term {k}")
            coeffs[k] = t["coeff"]
        return cls(d["X"], coeffs)


class ProjectionSplit(NamedTuple):
    alpha_pi: np.ndarray
    tail_energy: float


def eval_function(f: SpectralFunction, x):
    """Evaluate f at a scalar or array of inputs."""
    xs = check_domain(f.X, x)
    q, is_sin, c = f.arrays()
    if len(c) == 0:
        out = np.zeros_like(xs, dtype=float)
    else:
        arg = (2.0 * np.pi / f.X) * np.multiply.outer(xs, q)
        out = SQRT2 * (np.where(is_sin, np.sin(arg), np.cos(arg)) @ c)
    return float(out) if np.ndim(out) == 0 else out


def l2_norm(f: SpectralFunction) -> float:
    return math.sqrt(sum(v * v for v in f.coeffs.values()))


def project(f: SpectralFunction, hs: HypothesisSpace) -> ProjectionSplit:
    alpha_pi = np.array([f.coeffs.get(k, 0.0) for k in hs.features()])
    inside = set(hs.features())
    tail2 = sum(v * v for k, v in f.coeffs.items() if k not in inside)
    return ProjectionSplit(alpha_pi, math.sqrt(tail2))


def _require_in_space(f: SpectralFunction, hs: HypothesisSpace, err):
    inside = set(hs.features())
    outside = [k for k in f.coeffs if k not in inside]
    if outside:
        raise err(f"{len(outside)} coefficient(s) outside the hypothesis space, e.g. {outside[0]}")


def h_norm(f: SpectralFunction, hs: HypothesisSpace) -> float:
    """RKHS norm sqrt(sum alpha_i^2 / lambda_i)."""
    _require_in_space(f, hs, MembershipError)
    alpha = project(f, hs).alpha_pi
    return math.sqrt(float(np.sum(alpha**2 / hs.lam)))


def integral_operator_power(f: SpectralFunction, hs: HypothesisSpace, r: float) -> SpectralFunction:
    """Apply L_K^r: coefficient i becomes lambda_i^r alpha_i^pi.

    Terms outside the space are annihilated for r >= 0; for r < 0 the
    function must already lie in the space.
    """
    if r < 0:
        _require_in_space(f, hs, RangeError)
    alpha = project(f, hs).alpha_pi
    return SpectralFunction.from_space(hs, hs.lam**r * alpha)


class SupNorm(NamedTuple):
    grid_max: float
    analytic_bound: float


def sup_norm_numeric(f: SpectralFunction, grid_points: int = 10_000) -> SupNorm:
    if grid_points < 1000:
        raise ValueError("grid_points must be >= 1000")
    xs = np.linspace(-f.X / 2, f.X / 2, int(grid_points))
    vals = np.abs(eval_function(f, xs))
    bound = SQRT2 * sum(abs(v) for v in f.coeffs.values())
    return SupNorm(float(vals.max()) if len(f.coeffs) else 0.0, bound)
