"""Regularized least squares in the trigonometric hypothesis space.

``fit_ridge`` solves the E x E coordinate system and is the default route;
``fit_kernel_oracle`` solves the N x N representer system and exists only to
cross-check it.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy import linalg

from .basis import HypothesisSpace, feature_matrix, kernel_matrix
from .errors import NumericError, SchemaError, SizeError
from .functions import SpectralFunction, l2_norm, project

KERNEL_ORACLE_CAP = 5000
PINV_RCOND = 1e-10


@dataclass(frozen=True)
class Dataset:
    xs: np.ndarray
    ys: np.ndarray
    meta: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float).ravel()
        ys = np.asarray(self.ys, dtype=float).ravel()
        if xs.shape != ys.shape:
            raise ValueError(f"xs and ys differ in length: {xs.size} vs {ys.size}")
        if xs.size < 1:
            raise ValueError("dataset must contain at least one point")
        xs.setflags(write=False)
        ys.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def N(self) -> int:
        return self.xs.size

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("x,y\n")
        for x, y in zip(self.xs, self.ys):
            buf.write(f"{float(x)!r},{float(y)!r}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "Dataset":
        rows = list(csv.reader(io.StringIO(text)))
        rows = [r for r in rows if r and not r[0].startswith("#")]
        if not rows or [c.strip() for c in rows[0]] != ["x", "y"]:
            raise SchemaError("dataset CSV must start with header 'x,y'")
        xs, ys = [], []
        for lineno, r in enumerate(rows[1:], start=2):
            if len(r) != 2:
                raise SchemaError(f"line {lineno}: expected 2 columns, got {len(r)}")
            try:
                xs.append(float(r[0]))
                ys.append(float(r[1]))
            except ValueError as exc:
                raise SchemaError(f"line {lineno}: {exc}") from None
        return cls(np.array(xs), np.array(ys))


@dataclass(frozen=True)
class FitResult:
    alpha_hat: np.ndarray
    gamma: float
    f_z: SpectralFunction

    @classmethod
    def build(cls, hs: HypothesisSpace, alpha, gamma: float) -> "FitResult":
        alpha = np.asarray(alpha, dtype=float)
        return cls(alpha, float(gamma), SpectralFunction.from_space(hs, alpha))

    def to_dict(self) -> dict:
        return {"gamma": self.gamma, "alpha_hat": [float(a) for a in self.alpha_hat]}


def _check_gamma(gamma):
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma!r}")


def fit_ridge(hs: HypothesisSpace, d: Dataset, gamma: float, Phi: np.ndarray | None = None) -> FitResult:
    """Solve (Phi'Phi/N + gamma diag(1/lambda)) alpha = Phi'Y/N by Cholesky.

    ``Phi`` may be passed in when the caller already holds the feature matrix.
    """
    _check_gamma(gamma)
    if Phi is None:
        Phi = feature_matrix(hs, d.xs)
    N = d.N
    A = Phi.T @ Phi / N
    A[np.diag_indices_from(A)] += gamma / hs.lam
    try:
        alpha = linalg.cho_solve(linalg.cho_factor(A), Phi.T @ d.ys / N)
    except linalg.LinAlgError as exc:  # cannot happen for gamma > 0
        raise NumericError(f"ridge system not positive definite: {exc}") from exc
    return FitResult.build(hs, alpha, gamma)


def fit_kernel_oracle(hs: HypothesisSpace, d: Dataset, gamma: float, cap: int = KERNEL_ORACLE_CAP) -> FitResult:
    """Representer route: (K + N gamma I) c = Y, alpha = Sigma Phi' c."""
    _check_gamma(gamma)
    if d.N > cap:
        raise SizeError(f"N={d.N} exceeds kernel oracle cap {cap}")
    K = kernel_matrix(hs, d.xs)
    K[np.diag_indices_from(K)] += d.N * gamma
    c = linalg.cho_solve(linalg.cho_factor(K), d.ys)
    Phi = feature_matrix(hs, d.xs)
    return FitResult.build(hs, hs.lam * (Phi.T @ c), gamma)


def fit_unregularized(hs: HypothesisSpace, d: Dataset, Phi: np.ndarray | None = None) -> FitResult:
    """Minimum-norm least squares; singular values below 1e-10 * s_max count as zero."""
    if Phi is None:
        Phi = feature_matrix(hs, d.xs)
    alpha, *_ = linalg.lstsq(Phi, d.ys, cond=PINV_RCOND)
    return FitResult.build(hs, alpha, 0.0)


def ridge_objective(hs: HypothesisSpace, d: Dataset, gamma: float, alpha) -> float:
    """Empirical risk plus gamma * ||f||_H^2 at coefficient vector alpha."""
    Phi = feature_matrix(hs, d.xs)
    alpha = np.asarray(alpha, dtype=float)
    resid = d.ys - Phi @ alpha
    return float(resid @ resid / d.N + gamma * np.sum(alpha**2 / hs.lam))


def data_free_solution(hs: HypothesisSpace, f_rho: SpectralFunction, gamma: float) -> SpectralFunction:
    _check_gamma(gamma)
    alpha_pi = project(f_rho, hs).alpha_pi
    return SpectralFunction.from_space(hs, hs.lam / (hs.lam + gamma) * alpha_pi)


class TrueErrors(NamedTuple):
    sample: float
    approx: float
    overall: float


def true_errors(f_z: SpectralFunction, f_H: SpectralFunction, f_rho: SpectralFunction) -> TrueErrors:
    return TrueErrors(l2_norm(f_z - f_H), l2_norm(f_H - f_rho), l2_norm(f_z - f_rho))


def true_errors_coeffs(alpha_hat, lam, alpha_pi, tail_energy: float, gamma: float) -> TrueErrors:
    """Vector form of :func:`true_errors` for callers holding raw coefficients."""
    alpha_hat = np.asarray(alpha_hat)
    fH = lam / (lam + gamma) * alpha_pi
    t2 = tail_energy**2
    return TrueErrors(
        math.sqrt(float(np.sum((alpha_hat - fH) ** 2))),
        math.sqrt(float(np.sum((fH - alpha_pi) ** 2)) + t2),
        math.sqrt(float(np.sum((alpha_hat - alpha_pi) ** 2)) + t2),
    )


__all__ = [
    "Dataset",
    "FitResult",
    "TrueErrors",
    "fit_ridge",
    "fit_kernel_oracle",
    "fit_unregularized",
    "ridge_objective",
    "data_free_solution",
    "true_errors",
    "true_errors_coeffs",
]
