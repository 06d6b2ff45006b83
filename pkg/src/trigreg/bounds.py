"""Error bounds and regularization-selection rules.

All bounds are on L2(rho_X) distances.  Sample-error bounds: the
Chebyshev-type bound for trigonometric regression (``sample_bound_theorem1``)
and three literature benchmarks (Smale-Zhou, Lin-Guo-Zhou expectation bound,
Wang-Zhou moment-hypothesis bound).  Approximation-error bounds come in an
l2 variant (a) and an l-infinity variant (b); combining either with the
sample bound yields a closed-form minimizing gamma.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .basis import HypothesisSpace, ck_numeric, ck_paper, lambda_min
from .errors import DegenerateError, DomainError, SchemaError, ValidityError
from .functions import SpectralFunction, l2_norm, project

BOUND_KEYS = (
    "theorem1", "approx_a", "approx_b", "combined_a", "combined_b",
    "sz", "lgz", "wz", "gamma_hat_a", "gamma_hat_b", "condition_a_met",
)


@dataclass(frozen=True)
class BoundContext:
    """Constants consumed by every bound formula."""

    B_f: float
    B_sigma: float
    N: int
    delta: float
    C_K: float
    lambda_min: float
    lambdas: tuple[float, ...]
    alpha_pi: tuple[float, ...]
    tail_energy: float

    def __post_init__(self):
        for name in ("B_f", "B_sigma", "C_K", "lambda_min", "tail_energy"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "lambdas", tuple(float(v) for v in self.lambdas))
        object.__setattr__(self, "alpha_pi", tuple(float(v) for v in self.alpha_pi))
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 1:
            raise SchemaError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        if self.B_f < 0 or self.B_sigma < 0:
            raise SchemaError("B_f and B_sigma must be nonnegative")
        if not 0 < self.delta < 1:
            raise SchemaError(f"delta must lie in (0, 1), got {self.delta!r}")
        if len(self.lambdas) != len(self.alpha_pi):
            raise SchemaError("lambdas and alpha_pi must have equal length")
        if self.tail_energy < 0:
            raise SchemaError("tail_energy must be nonnegative")

    @classmethod
    def from_truth(
        cls,
        hs: HypothesisSpace,
        f_rho: SpectralFunction,
        noise_std: float,
        N: int,
        delta: float,
        ck: str = "paper",
        B_f: Optional[float] = None,
        B_sigma: Optional[float] = None,
    ) -> "BoundContext":
        """Context with B_f = ||f_rho|| and B_sigma = noise_std unless overridden."""
        split = project(f_rho, hs)
        if ck == "paper":
            C_K = ck_paper(hs)
        elif ck == "numeric":
            C_K = ck_numeric(hs)
        else:
            raise ValueError(f"ck must be 'paper' or 'numeric', got {ck!r}")
        return cls(
            B_f=l2_norm(f_rho) if B_f is None else B_f,
            B_sigma=noise_std if B_sigma is None else B_sigma,
            N=N,
            delta=delta,
            C_K=C_K,
            lambda_min=lambda_min(hs),
            lambdas=hs.lambdas,
            alpha_pi=tuple(split.alpha_pi),
            tail_energy=split.tail_energy,
        )

    @property
    def lam(self) -> np.ndarray:
        return np.asarray(self.lambdas)

    @property
    def alpha_l2(self) -> float:
        return float(np.linalg.norm(self.alpha_pi))

    @property
    def alpha_inf(self) -> float:
        return float(np.max(np.abs(self.alpha_pi))) if self.alpha_pi else 0.0

    @property
    def E(self) -> int:
        return len(self.lambdas)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambdas"] = list(self.lambdas)
        d["alpha_pi"] = list(self.alpha_pi)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "BoundContext":
        names = set(cls.__dataclass_fields__)
        extra = set(d) - names
        if extra:
            raise SchemaError(f"unknown key(s) in bound context: {sorted(extra)}")
        missing = names - set(d)
        if missing:
            raise SchemaError(f"missing key(s) in bound context: {sorted(missing)}")
        if isinstance(d["N"], bool) or not isinstance(d["N"], int):
            raise SchemaError("N must be an integer")
        return cls(**d)


def _positive(gamma, allow_zero=False):
    if gamma < 0 or (gamma == 0 and not allow_zero) or math.isnan(gamma):
        raise ValueError(f"gamma must be {'nonnegative' if allow_zero else 'positive'}, got {gamma!r}")


def sample_constant(ctx: BoundContext) -> float:
    """A = C_K^3 sqrt((B_f^2 + B_sigma^2) / (N delta lambda_min)); the sample bound is A / gamma."""
    return ctx.C_K**3 * math.sqrt((ctx.B_f**2 + ctx.B_sigma**2) / (ctx.N * ctx.delta * ctx.lambda_min))


def sample_bound_theorem1(ctx: BoundContext, gamma: float) -> float:
    _positive(gamma)
    return sample_constant(ctx) / gamma


def approx_bound_a(ctx: BoundContext, gamma: float) -> float:
    _positive(gamma, allow_zero=True)
    if math.isinf(gamma):
        return ctx.alpha_l2 + ctx.tail_energy
    return gamma / (ctx.lambda_min + gamma) * ctx.alpha_l2 + ctx.tail_energy


def approx_bound_b(ctx: BoundContext, gamma: float) -> float:
    _positive(gamma, allow_zero=True)
    return ctx.alpha_inf * gamma * float(np.sum(1.0 / ctx.lam)) + ctx.tail_energy


class GammaHat(NamedTuple):
    """Minimizer of the combined bound; ``gamma`` is None when no finite minimizer exists."""

    gamma: Optional[float]
    condition_met: bool


def gamma_hat_a(ctx: BoundContext) -> GammaHat:
    A = sample_constant(ctx)
    b = ctx.lambda_min
    B = ctx.alpha_l2
    denom = B * b - A
    if not denom > 0:
        return GammaHat(None, False)
    return GammaHat(b * (A + math.sqrt(A * B * b)) / denom, True)


def variant_b_slope(ctx: BoundContext) -> float:
    """D = sum_i ||alpha_pi||_inf / lambda_i."""
    return float(np.sum(ctx.alpha_inf / ctx.lam))


def gamma_hat_b(ctx: BoundContext) -> float:
    D = variant_b_slope(ctx)
    if D == 0:
        raise DegenerateError("alpha_pi is identically zero; variant (b) has no minimizer")
    return math.sqrt(sample_constant(ctx) / D)


def combined_bound(ctx: BoundContext, gamma: float, variant: str = "a") -> float:
    _positive(gamma)
    if variant == "a":
        return sample_bound_theorem1(ctx, gamma) + approx_bound_a(ctx, gamma)
    if variant == "b":
        return sample_bound_theorem1(ctx, gamma) + approx_bound_b(ctx, gamma)
    raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")


# --- Smale-Zhou -------------------------------------------------------------

def sz_min_gamma(ctx: BoundContext) -> float:
    return 8.0 * ctx.C_K**2 * math.log(4.0 / ctx.delta) / math.sqrt(ctx.N)


def sz_bound(ctx: BoundContext, M: float, gamma: float) -> float:
    """12 C_K M log(4/delta) / sqrt(N gamma), valid for |y| <= M and gamma >= sz_min_gamma."""
    gmin = sz_min_gamma(ctx)
    if gamma < gmin * (1 - 1e-12):
        raise ValidityError(f"gamma={gamma} below the Smale-Zhou threshold {gmin}")
    return 12.0 * ctx.C_K * M * math.log(4.0 / ctx.delta) / math.sqrt(ctx.N * gamma)


def sz_crossover_M(ctx: BoundContext, gamma: float) -> float:
    """Largest output bound M for which the Smale-Zhou bound is at most the uniform sample bound."""
    _positive(gamma)
    L = math.log(4.0 / ctx.delta)
    return (ctx.C_K**2 / 12.0) * math.sqrt((ctx.B_f**2 + ctx.B_sigma**2) / (ctx.lambda_min * gamma)) / (
        math.sqrt(ctx.delta) * L
    )


# --- Lin-Guo-Zhou -----------------------------------------------------------

def effective_dimension(lambdas, gamma: float) -> float:
    """sum_i lambda_i / (lambda_i + gamma); accepts a HypothesisSpace or raw weights."""
    lam = lambdas.lam if isinstance(lambdas, HypothesisSpace) else np.asarray(lambdas, dtype=float)
    _positive(gamma, allow_zero=True)
    return float(np.sum(lam / (lam + gamma)))


class LGZBound(NamedTuple):
    expectation: float
    probability_bound_at_delta: float


def lgz_bound(
    ctx: BoundContext,
    hs: HypothesisSpace,
    gamma: float,
    approx_error: float,
    sigma_norm: float,
    p: float = 2.0,
) -> LGZBound:
    """Expectation bound on the sample error, turned into a 1-delta bound by Markov.

    ``sigma_norm`` is ||sigma_rho^2||_p; under homoskedastic noise it is the
    noise variance.
    """
    _positive(gamma)
    C = ctx.C_K
    N = ctx.N
    Ng = N * gamma
    neff = effective_dimension(hs, gamma)
    prefactor = (2 + 56 * C**4 + 57 * C**2) * (1 + 1 / Ng**2 + neff / Ng)
    noise_term = C ** (1 / p) * math.sqrt(sigma_norm) * (neff / N) ** (0.5 * (1 - 1 / p)) * (1 / Ng) ** (1 / (2 * p))
    approx_term = C * approx_error / math.sqrt(Ng)
    expectation = prefactor * (noise_term + approx_term)
    return LGZBound(expectation, expectation / ctx.delta)


# --- Wang-Zhou --------------------------------------------------------------

def G_of_s(s: float) -> float:
    """Smallest constant with log(1 + x) < G(s) x^s for all x > 0 (boundary value)."""
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    return ((1 - s) / s) ** (1 - s)


@dataclass(frozen=True)
class WZConstants:
    C: float
    M_tilde: float
    C_beta: float
    C0: float
    C1: float
    C2: float
    C3: float
    C4: float
    C5: float
    C_tilde_eps: float
    s: float
    eps_internal: float
    eps: float = field(default=float("nan"))
    log_C_tilde_eps: float = field(default=float("nan"))


def wz_constants(ctx: BoundContext, hs: HypothesisSpace, B_inf: float, eps: float) -> WZConstants:
    """Constant chain of the moment-hypothesis bound with beta = 1.

    The corollary's ``eps`` maps to ``eps/2`` inside the general statement,
    with ``s = eps_int / (1 - eps_int)``.
    """
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    beta = 1.0
    e = eps / 2.0
    s = e / (1.0 - e)
    C = 4.0
    Ck = ctx.C_K
    M_tilde = max(ctx.B_sigma, B_inf)  # sqrt(B_0) with B_0 = B_sigma^2
    C_beta = ctx.B_f**2 / ctx.lambda_min
    C0 = 2.0 * hs.E * G_of_s(s)
    C1 = 6 * Ck + 6 * C + 8 * (1 + math.sqrt(2 * C)) / M_tilde + 520 * (Ck + C + 2 * (C + 1)) ** 2 * (C0 + 1)
    C2 = math.sqrt(2 * (C1 + 32**2 * (C + 1) ** 2))
    C3 = math.sqrt(38 * C_beta) + (Ck + 1) * math.sqrt(480 * C_beta) + M_tilde
    C4 = M_tilde * (2 * Ck * (C + (1 + 2 * math.sqrt(2 * C)) + 1)) + C3
    C5 = 38 * C_beta + 2 * (C1 + 32**2 * (C + 1) ** 2) * C4**2 * (2 / (s + 1)) ** 2 + 480 * (Ck + 1) ** 2 * C_beta
    es = e * (s + 1)
    log_ct = (
        math.log(C5)
        - 2 * math.log(e)
        + (4 * beta / es) * math.log(C2)
        + (beta * (1 + beta) / es + 2) * math.log1p(math.log1p(2 / es))
    )
    try:
        C_tilde = math.exp(log_ct)
    except OverflowError:
        C_tilde = math.inf
    return WZConstants(C, M_tilde, C_beta, C0, C1, C2, C3, C4, C5, C_tilde, s, e, eps, log_ct)


def wz_log_bound(wc: WZConstants, N: int, delta: float) -> float:
    """Natural log of :func:`wz_bound`, finite even when the bound overflows."""
    eps = wc.eps
    log_sq = wc.log_C_tilde_eps + (eps - 1) * math.log(N) + (4 / eps + 2) * math.log(math.log(4 / delta))
    return 0.5 * log_sq


def wz_bound(wc: WZConstants, N: int, delta: float) -> float:
    """Square root of the squared-norm bound, evaluated at gamma = N^(eps - 1)."""
    try:
        return math.exp(wz_log_bound(wc, N, delta))
    except OverflowError:
        return math.inf


def wz_gamma(N: int, eps: float) -> float:
    return float(N) ** (eps - 1)


# --- report -----------------------------------------------------------------

def bound_report(
    ctx: BoundContext,
    hs: HypothesisSpace,
    gamma: float,
    M: Optional[float] = None,
    approx_error: Optional[float] = None,
    sigma_norm: Optional[float] = None,
    B_inf: Optional[float] = None,
    eps: Optional[float] = None,
) -> dict:
    """Flat key -> value map over :data:`BOUND_KEYS`; inapplicable bounds are NaN."""
    nan = float("nan")
    gha = gamma_hat_a(ctx)
    try:
        ghb = gamma_hat_b(ctx)
    except DegenerateError:
        ghb = nan
    rep = {
        "theorem1": sample_bound_theorem1(ctx, gamma),
        "approx_a": approx_bound_a(ctx, gamma),
        "approx_b": approx_bound_b(ctx, gamma),
        "combined_a": combined_bound(ctx, gamma, "a"),
        "combined_b": combined_bound(ctx, gamma, "b"),
        "sz": nan,
        "lgz": nan,
        "wz": nan,
        "gamma_hat_a": gha.gamma if gha.condition_met else nan,
        "gamma_hat_b": ghb,
        "condition_a_met": 1.0 if gha.condition_met else 0.0,
    }
    if M is not None and gamma >= sz_min_gamma(ctx) * (1 - 1e-12):
        rep["sz"] = sz_bound(ctx, M, gamma)
    if approx_error is not None and sigma_norm is not None:
        rep["lgz"] = lgz_bound(ctx, hs, gamma, approx_error, sigma_norm).probability_bound_at_delta
    if B_inf is not None and eps is not None:
        rep["wz"] = wz_bound(wz_constants(ctx, hs, B_inf, eps), ctx.N, ctx.delta)
    return rep


def log_relative_difference(bound: float, true: float) -> float:
    """log((bound - true) / true), computed stably for huge or infinite bounds."""
    if true <= 0:
        return math.nan
    if math.isinf(bound):
        return math.inf
    if bound <= true:
        return math.nan
    return math.log(bound - true) - math.log(true)


def log_relative_difference_from_log(log_bound: float, true: float) -> float:
    if math.isinf(log_bound):
        return log_bound
    lt = math.log(true)
    if log_bound <= lt:
        return math.nan
    # log(b - t) = log b + log1p(-t/b)
    return log_bound + math.log1p(-math.exp(lt - log_bound)) - lt

