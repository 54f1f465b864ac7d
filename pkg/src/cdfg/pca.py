"""Source-fitted PCA reused across domains.

The projection is learned on the source training set only and applied
unchanged to any other matrix over the same descriptor set; target data is
centered with the source mean.  The decomposition never forms the d x d
covariance: a thin SVD of the centered data costs O(min(n,d)^2 max(n,d)),
which matters when n is tens of rows and d is thousands of columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._container import load_container, save_container
from .data import as_array
from .errors import ConfigError, DegenerateError, ShapeError
from .kernels import fix_signs


@dataclass(frozen=True, eq=False)
class PcaModel:
    """Fitted linear projection onto the top-k principal directions.

    `components` has orthonormal columns (d x k); `explained_variance_ratio`
    is nonincreasing and sums to `cumulative_variance`.
    """

    mean: np.ndarray
    components: np.ndarray
    explained_variance_ratio: np.ndarray
    cumulative_variance: float
    eigenvalues: np.ndarray

    @property
    def k(self) -> int:
        return self.components.shape[1]


def pca_fit(train, k: int = 80) -> PcaModel:
    """Fit PCA on training rows with the unbiased (n - 1) covariance divisor.

    Requires 1 <= k <= min(rows - 1, dims); with fewer samples than
    requested components the covariance has no k-dimensional spectrum.
    """
    x = as_array(train)
    n, d = x.shape
    if n < 2:
        raise ConfigError(f"pca needs at least 2 training rows, got {n}")
    if not 1 <= k <= min(n - 1, d):
        raise ConfigError(f"k={k} out of range, need 1 <= k <= min(rows-1={n - 1}, dims={d})")
    mean = x.mean(axis=0)
    xc = x - mean
    _, s, vt = np.linalg.svd(xc, full_matrices=False)
    eigenvalues = (s * s) / (n - 1)
    total = float(eigenvalues.sum())
    if total <= 1e-20 * max(1.0, float(np.mean(x * x))):
        raise DegenerateError("training data has zero variance")
    components = fix_signs(vt[:k].T)
    ratio = eigenvalues[:k] / total
    return PcaModel(
        mean=mean,
        components=components,
        explained_variance_ratio=ratio,
        cumulative_variance=float(ratio.sum()),
        eigenvalues=eigenvalues[:k],
    )


def pca_transform(model: PcaModel, x) -> np.ndarray:
    """Project rows of `x` into the fitted space: (x - mean) @ components."""
    xv = as_array(x)
    if xv.shape[1] != model.mean.shape[0]:
        raise ShapeError(f"dims mismatch: {xv.shape[1]} vs model {model.mean.shape[0]}")
    return (xv - model.mean) @ model.components


_KIND = "cdfg-pca-model-1"


def save_pca_model(model: PcaModel, path) -> None:
    save_container(
        path,
        _KIND,
        {
            "mean": model.mean,
            "components": model.components,
            "explained_variance_ratio": model.explained_variance_ratio,
            "cumulative_variance": model.cumulative_variance,
            "eigenvalues": model.eigenvalues,
        },
    )


def load_pca_model(path) -> PcaModel:
    f = load_container(path, _KIND)
    return PcaModel(
        mean=f["mean"],
        components=f["components"],
        explained_variance_ratio=f["explained_variance_ratio"],
        cumulative_variance=float(f["cumulative_variance"]),
        eigenvalues=f["eigenvalues"],
    )
