"""Trigonometric feature system on [-X/2, X/2] and the weighted kernel it induces.

Feature ``i`` (0-based) of a space with frequencies ``Q = (q_1, ..., q_{E/2})`` is
``sqrt(2) sin(2 pi q_{i+1} x / X)`` for ``i < E/2`` and the matching cosine for
``i >= E/2``.  Under the uniform probability measure on the domain these
features are orthonormal.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, SchemaError

SQRT2 = math.sqrt(2.0)
DOMAIN_RTOL = 1e-12


class Parity(str, enum.Enum):
    SIN = "sin"
    COS = "cos"


@dataclass(frozen=True, order=True)
class Frequency:
    q: int
    parity: Parity

    def __post_init__(self):
        if isinstance(self.q, bool) or int(self.q) != self.q or self.q < 1:
            raise ValueError(f"frequency index must be a positive integer, got {self.q!r}")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "parity", Parity(self.parity))


@dataclass(frozen=True)
class HypothesisSpace:
    """Finite RKHS spanned by E weighted sine/cosine features.

    ``lambdas[:E//2]`` weight the sines of ``Q`` (in order), ``lambdas[E//2:]``
    the cosines.
    """

    X: float
    Q: tuple[int, ...]
    lambdas: tuple[float, ...]

    def __post_init__(self):
        X = float(self.X)
        Q = tuple(int(q) for q in self.Q)
        lam = tuple(float(v) for v in self.lambdas)
        if not (X > 0 and math.isfinite(X)):
            raise SchemaError(f"X must be a positive real, got {self.X!r}")
        if len(Q) == 0:
            raise SchemaError("Q must be nonempty")
        if any(q < 1 for q in Q):
            raise SchemaError("Q entries must be positive integers")
        if len(set(Q)) != len(Q):
            raise SchemaError(f"Q has duplicate frequencies: {list(Q)}")
        if len(lam) % 2 != 0:
            raise SchemaError(f"lambdas: E must be even, got E={len(lam)}")
        if len(lam) != 2 * len(Q):
            raise SchemaError(f"lambdas: expected E = 2|Q| = {2 * len(Q)} weights, got {len(lam)}")
        if not all(v > 0 and math.isfinite(v) for v in lam):
            raise SchemaError("lambdas must all be positive and finite")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "lambdas", lam)

    @classmethod
    def uniform(cls, X: float, Q: Sequence[int], lam: float) -> "HypothesisSpace":
        return cls(X, tuple(Q), (float(lam),) * (2 * len(Q)))

    @property
    def E(self) -> int:
        return len(self.lambdas)

    @property
    def lam(self) -> np.ndarray:
        return np.asarray(self.lambdas, dtype=float)

    @property
    def q_array(self) -> np.ndarray:
        """Frequency of each feature, length E."""
        q = np.asarray(self.Q, dtype=float)
        return np.concatenate([q, q])

    def features(self) -> list[Frequency]:
        """Frequency/parity label of every feature in index order."""
        return [Frequency(q, Parity.SIN) for q in self.Q] + [Frequency(q, Parity.COS) for q in self.Q]

    def to_dict(self) -> dict:
        return {"X": self.X, "Q": list(self.Q), "lambdas": list(self.lambdas)}

    @classmethod
    def from_dict(cls, d: dict) -> "HypothesisSpace":
        allowed = {"X", "Q", "lambdas"}
        extra = set(d) - allowed
        if extra:
            raise SchemaError(f"unknown key(s) in hypothesis space: {sorted(extra)}")
        missing = allowed - set(d)
        if missing:
            raise SchemaError(f"missing key(s) in hypothesis space: {sorted(missing)}")
        if any(isinstance(q, bool) or not isinstance(q, int) for q in d["Q"]):
            raise SchemaError("Q entries must be integers")
        return cls(d["X"], tuple(d["Q"]), tuple(d["lambdas"]))


def check_domain(X: float, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    half = X / 2.0 + DOMAIN_RTOL * X
    bad = ~(np.abs(x) <= half)
    if np.any(bad):
        first = x[bad].flat[0]
        raise DomainError(f"input {first!r} outside [-{X / 2}, {X / 2}]")
    return x


def feature_matrix(hs: HypothesisSpace, xs) -> np.ndarray:
    """Stack of feature rows, shape (N, E)."""
    x = check_domain(hs.X, np.atleast_1d(xs))
    arg = (2.0 * np.pi / hs.X) * np.outer(x, np.asarray(hs.Q, dtype=float))
    return SQRT2 * np.hstack([np.sin(arg), np.cos(arg)])


def eval_features(hs: HypothesisSpace, x: float) -> np.ndarray:
    return feature_matrix(hs, [x])[0]


def kernel_matrix(hs: HypothesisSpace, xa, xb=None) -> np.ndarray:
    Pa = feature_matrix(hs, xa)
    Pb = Pa if xb is None else feature_matrix(hs, xb)
    return (Pa * hs.lam) @ Pb.T


def kernel_eval(hs: HypothesisSpace, xa: float, xb: float) -> float:
    return float(kernel_matrix(hs, [xa], [xb])[0, 0])


def ck_paper(hs: HypothesisSpace) -> float:
    """sqrt(sum_j max(lambda_j, lambda_{j+E/2})), the closed form used by all bound formulas."""
    lam = hs.lam
    h = hs.E // 2
    return math.sqrt(float(np.sum(np.maximum(lam[:h], lam[h:]))))


def ck_numeric(hs: HypothesisSpace, grid_points: int = 10_000) -> float:
    """Grid supremum of sqrt(K(x, x)); for a PSD kernel the diagonal dominates."""
    if grid_points < 100:
        raise ValueError("grid_points must be >= 100")
    xs = np.linspace(-hs.X / 2, hs.X / 2, int(grid_points))
    Phi = feature_matrix(hs, xs)
    diag = np.einsum("ij,ij,j->i", Phi, Phi, hs.lam)
    return float(np.sqrt(diag.max()))


def lambda_min(hs: HypothesisSpace) -> float:
    return float(min(hs.lambdas))
