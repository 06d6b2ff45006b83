"""Regularized least squares on weighted trigonometric features, with error bounds."""
from .basis import Frequency, HypothesisSpace, Parity, ck_numeric, ck_paper, feature_matrix, kernel_matrix
from .estimator import Dataset, FitResult, fit_kernel_oracle, fit_ridge, fit_unregularized
from .functions import SpectralFunction, l2_norm, project

__all__ = [
    "Frequency", "HypothesisSpace", "Parity", "ck_numeric", "ck_paper", "feature_matrix", "kernel_matrix",
    "Dataset", "FitResult", "fit_kernel_oracle", "fit_ridge", "fit_unregularized",
    "SpectralFunction", "l2_norm", "project",
]
