"""Empirical-Bayes choice of gamma and the expected parameter MSE.

Bayesian reading of the ridge problem: alpha ~ N(0, Sigma_alpha / N), noise
variance gamma.  The posterior mean of alpha given gamma is exactly the ridge
estimate with regularization gamma.  A two-block Gibbs sampler alternates the
alpha and gamma full conditionals; the retained gamma samples are scored by
the negative log evidence of the model with prior covariance
P / N = sigma^2 Sigma_alpha / (gamma N) and known noise variance sigma^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .basis import HypothesisSpace, feature_matrix
from .errors import DegenerateError, NumericError, RankError
from .estimator import Dataset
from .functions import SpectralFunction, eval_function, project


@dataclass(frozen=True)
class GibbsConfig:
    total_samples: int = 1500
    keep_last: int = 1000
    init_gamma: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.total_samples < 1 or self.keep_last < 1:
            raise ValueError("sample counts must be positive")
        if self.keep_last > self.total_samples:
            raise ValueError("keep_last must not exceed total_samples")
        if not self.init_gamma > 0:
            raise ValueError("init_gamma must be positive")


@dataclass(frozen=True)
class GibbsTrace:
    gamma_samples: np.ndarray
    alpha_samples: np.ndarray
    neg_log_evidence_at_samples: np.ndarray

    def __post_init__(self):
        n = len(self.gamma_samples)
        if len(self.alpha_samples) != n or len(self.neg_log_evidence_at_samples) != n:
            raise ValueError("trace columns must have equal length")

    def __len__(self):
        return len(self.gamma_samples)

    def to_csv(self, include_alpha: bool = False) -> str:
        cols = ["sample_index", "gamma", "neg_log_evidence"]
        E = self.alpha_samples.shape[1] if include_alpha and len(self) else 0
        cols += [f"alpha_{i}" for i in range(E)]
        lines = [",".join(cols)]
        for k in range(len(self)):
            row = [str(k), repr(float(self.gamma_samples[k])), repr(float(self.neg_log_evidence_at_samples[k]))]
            if E:
                row += [repr(float(a)) for a in self.alpha_samples[k]]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def neg_log_evidence(hs: HypothesisSpace, d: Dataset, gamma: float, sigma2: float, Phi=None) -> float:
    """Y' S^-1 Y + log det S with S = sigma2 (Phi Sigma_alpha Phi' / (gamma N) + I).

    Evaluated through the E x E matrix M = gamma N Sigma_alpha^-1 + Phi'Phi
    (Woodbury identity and matrix determinant lemma).
    """
    if not (gamma > 0 and sigma2 > 0):
        raise ValueError("gamma and sigma2 must be positive")
    if Phi is None:
        Phi = feature_matrix(hs, d.xs)
    N = d.N
    Y = d.ys
    prior_var = hs.lam / (gamma * N)
    M = Phi.T @ Phi
    M[np.diag_indices_from(M)] += 1.0 / prior_var
    c, low = linalg.cho_factor(M)
    b = Phi.T @ Y
    quad = (Y @ Y - b @ linalg.cho_solve((c, low), b)) / sigma2
    logdet = N * math.log(sigma2) + 2.0 * float(np.sum(np.log(np.diag(c)))) + float(np.sum(np.log(prior_var)))
    val = quad + logdet
    if not math.isfinite(val):
        raise NumericError(f"negative log evidence not finite at gamma={gamma}")
    return float(val)


class _Spectral:
    """Eigen-decomposition shared by every gamma evaluated on one dataset.

    With W = Sigma_tilde^{1/2} and W Phi'Phi W = V diag(ev) V', both the
    alpha conditional and the evidence reduce to diagonal operations.
    """

    def __init__(self, Phi: np.ndarray, lam: np.ndarray, Y: np.ndarray):
        N = Phi.shape[0]
        self.N = N
        self.Y = Y
        self.w = np.sqrt(lam / N)
        H = (self.w[:, None] * (Phi.T @ Phi)) * self.w[None, :]
        ev, V = linalg.eigh(H)
        self.ev = np.clip(ev, 0.0, None)
        self.V = V
        self.WV = self.w[:, None] * V
        self.proj = self.WV.T @ (Phi.T @ Y)  # V' W Phi' Y
        self.yy = float(Y @ Y)

    def alpha_mean_and_scale(self, gamma: float):
        shrink = 1.0 / (1.0 + self.ev / gamma)
        mean = self.WV @ (shrink * self.proj) / gamma
        return mean, np.sqrt(shrink)

    def draw_alpha(self, gamma: float, rng: np.random.Generator) -> np.ndarray:
        mean, scale = self.alpha_mean_and_scale(gamma)
        return mean + self.WV @ (scale * rng.standard_normal(len(mean)))

    def neg_log_evidence(self, gamma: float, sigma2: float) -> float:
        # nonzero eigenvalues of Phi Sigma_tilde Phi' coincide with ev
        quad = (self.yy - float(np.sum(self.proj**2 / (gamma + self.ev)))) / sigma2
        logdet = self.N * math.log(sigma2) + float(np.sum(np.log1p(self.ev / gamma)))
        return quad + logdet


def gamma_conditional_params(residual_sq: float, N: int) -> tuple[float, float]:
    """(shape, rate) of the gamma full conditional."""
    if residual_sq <= 0:
        raise DegenerateError("zero residual: gamma conditional is degenerate")
    return N / 2.0, residual_sq / 2.0


def alpha_conditional(hs: HypothesisSpace, d: Dataset, gamma: float, Phi=None):
    """Mean and covariance of alpha | gamma, Y (dense closed form)."""
    if Phi is None:
        Phi = feature_matrix(hs, d.xs)
    prec = Phi.T @ Phi / gamma
    prec[np.diag_indices_from(prec)] += d.N / hs.lam
    cov = linalg.cho_solve(linalg.cho_factor(prec), np.eye(hs.E))
    mean = cov @ (Phi.T @ d.ys) / gamma
    return mean, cov


def sample_alpha_conditional(hs: HypothesisSpace, d: Dataset, gamma: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """n independent draws of alpha | gamma, Y by the sampler's own alpha step."""
    sp = _Spectral(feature_matrix(hs, d.xs), hs.lam, d.ys)
    return np.array([sp.draw_alpha(gamma, rng) for _ in range(n)])


def gibbs_run(hs: HypothesisSpace, d: Dataset, cfg: GibbsConfig, sigma2: float | None = None) -> GibbsTrace:
    """Alternate exact draws from alpha | gamma and gamma | alpha.

    ``sigma2`` is the known noise variance used to score each sample's
    evidence; when omitted the evidence column is NaN.
    """
    rng = np.random.default_rng(cfg.seed)
    Phi = feature_matrix(hs, d.xs)
    sp = _Spectral(Phi, hs.lam, d.ys)
    N, E = d.N, hs.E
    gam = np.empty(cfg.total_samples)
    alph = np.empty((cfg.total_samples, E))
    nle = np.full(cfg.total_samples, np.nan)
    g = float(cfg.init_gamma)
    for k in range(cfg.total_samples):
        a = sp.draw_alpha(g, rng)
        r = d.ys - Phi @ a
        shape, rate = gamma_conditional_params(float(r @ r), N)
        g = float(rng.gamma(shape, 1.0 / rate))
        if not g > 0:
            raise DegenerateError("gamma sample underflowed to zero")
        gam[k] = g
        alph[k] = a
        if sigma2 is not None:
            nle[k] = sp.neg_log_evidence(g, sigma2)
    return GibbsTrace(gam, alph, nle)


def gamma_hat_gibbs(trace: GibbsTrace, cfg: GibbsConfig) -> float:
    """Retained sample with the smallest negative log evidence."""
    if len(trace) == 0:
        raise ValueError("empty trace")
    keep = min(cfg.keep_last, len(trace))
    g = trace.gamma_samples[-keep:]
    v = trace.neg_log_evidence_at_samples[-keep:]
    if np.all(np.isnan(v)):
        raise ValueError("trace carries no evidence values")
    return float(g[int(np.nanargmin(v))])


def residual_vector(hs: HypothesisSpace, xs, f_rho: SpectralFunction) -> np.ndarray:
    """r_t = f_rho(x_t) - phi(x_t)' alpha_pi: contribution of frequencies outside the space."""
    alpha_pi = project(f_rho, hs).alpha_pi
    return np.atleast_1d(eval_function(f_rho, xs)) - feature_matrix(hs, xs) @ alpha_pi


def expected_param_mse(hs: HypothesisSpace, xs, f_rho: SpectralFunction, sigma2: float, gamma: float) -> float:
    """E_e ||alpha_hat(gamma) - alpha_pi||^2 over noise draws at fixed inputs.

    alpha_hat = (Phi'Phi + gamma Sigma_tilde^-1)^-1 Phi'Y with
    Sigma_tilde = Sigma_alpha / N.  The bias/residual cross term enters with
    a minus sign: alpha_hat - alpha_pi = S^-1 (Phi'r - gamma Sigma_tilde^-1 alpha_pi + Phi'e).
    """
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    Phi = feature_matrix(hs, xs)
    N = len(xs)
    alpha_pi = project(f_rho, hs).alpha_pi
    r = residual_vector(hs, xs, f_rho)
    G = Phi.T @ Phi
    Sinv = N / hs.lam  # diagonal of Sigma_tilde^-1
    S = G + np.diag(gamma * Sinv)
    if gamma == 0 and np.linalg.matrix_rank(Phi) < hs.E:
        raise RankError("Phi lacks full column rank; M(0) is undefined")
    try:
        Sf = linalg.cho_factor(S)
    except linalg.LinAlgError as exc:
        raise RankError(f"regularized Gram matrix is singular: {exc}") from exc
    u = Sinv * alpha_pi
    Pr = Phi.T @ r
    R = sigma2 * G + gamma**2 * np.outer(u, u) + np.outer(Pr, Pr) - gamma * (np.outer(u, Pr) + np.outer(Pr, u))
    Si = linalg.cho_solve(Sf, np.eye(hs.E))
    return float(np.trace(Si @ R @ Si))
