"""One-class nu-SVM trained on normal-only data.

The detector solves the dual problem

    minimize    (1/2) a^T Q a
    subject to  0 <= a_i <= 1/(nu n),   sum_i a_i = 1,

with Q the training Gram matrix, using pairwise coordinate updates (SMO)
with the maximally KKT-violating pair as the working set.  nu upper-bounds
the fraction of training outliers and lower-bounds the support-vector
fraction.

Anomaly scores are oriented so that higher means more anomalous:

    score(x) = rho - sum_j a_j k(x_j, x),

positive on the anomalous side of the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._container import load_container, save_container
from .data import as_array
from .errors import ConfigError, DataError, NumericalError, ShapeError
from .kernels import KernelSpec, gram, resolve_kernel

_ALPHA_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class ScoreSeries:
    """Per-frame anomaly scores paired with ground-truth labels (+1 anomaly)."""

    scores: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=np.float64).ravel()
        labels = np.asarray(self.labels, dtype=np.int64).ravel()
        if scores.shape[0] != labels.shape[0]:
            raise DataError(f"{scores.shape[0]} scores for {labels.shape[0]} labels")
        if not np.all(np.isfinite(scores)):
            raise DataError("scores contain non-finite values")
        if not np.all(np.isin(labels, (-1, 1))):
            raise DataError("labels must be +1 or -1")
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True, eq=False)
class OcsvmModel:
    """Fitted detector: dual coefficients, offset, and support set."""

    alphas: np.ndarray
    rho: float
    nu: float
    kernel: KernelSpec
    support_vectors: np.ndarray
    support_alphas: np.ndarray
    n_train: int
    iterations: int


def dual_objective(q: np.ndarray, alphas: np.ndarray) -> float:
    """The dual objective (1/2) a^T Q a."""
    return 0.5 * float(alphas @ q @ alphas)


def ocsvm_fit(
    train,
    nu: float = 0.25,
    kernel: KernelSpec | None = None,
    tol: float = 1e-6,
    max_iter: int | None = None,
) -> OcsvmModel:
    """Train the detector on normal-only rows.

    Parameters
    ----------
    train
        Training matrix, at least 2 rows.
    nu : float in (0, 1]
        Outlier budget; the box constraint is 1/(nu n).
    kernel
        Defaults to the linear kernel.  A median-heuristic rbf gamma is
        resolved against the training rows.
    tol
        KKT violation threshold, relative to the largest kernel
        self-similarity.
    max_iter
        Defaults to 100 n pairwise updates, with a floor of 10000: tiny
        problems whose optimal face is flat (more margin vectors than the
        kernel rank) zigzag longer than their size suggests.

    Raises
    ------
    NumericalError
        If the KKT violation is still above tolerance after `max_iter`
        updates (the message carries the iteration count).
    """
    x = as_array(train)
    n = x.shape[0]
    if n < 2:
        raise ConfigError(f"need at least 2 training rows, got {n}")
    if not 0 < nu <= 1:
        raise ConfigError(f"nu must be in (0, 1], got {nu}")
    if kernel is None:
        kernel = KernelSpec("linear")
    kernel = resolve_kernel(kernel, x)
    if max_iter is None:
        max_iter = max(100 * n, 10_000)

    q = gram(kernel, x, x)
    c = 1.0 / (nu * n)

    alphas = np.full(n, 1.0 / n)  # uniform start, feasible for every nu in (0, 1]
    grad = q @ alphas
    scale = max(1.0, float(np.max(np.abs(np.diag(q)))))
    threshold = tol * scale

    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        up = alphas < c - _ALPHA_EPS  # room to grow
        down = alphas > _ALPHA_EPS  # room to shrink
        gi = np.where(up, grad, np.inf)
        gj = np.where(down, grad, -np.inf)
        i = int(np.argmin(gi))
        j = int(np.argmax(gj))
        violation = grad[j] - grad[i]
        if violation <= threshold:
            converged = True
            iterations -= 1
            break
        denom = q[i, i] + q[j, j] - 2.0 * q[i, j]
        step = violation / denom if denom > 1e-300 else np.inf
        step = min(step, c - alphas[i], alphas[j])
        alphas[i] += step
        alphas[j] -= step
        grad += step * (q[:, i] - q[:, j])
    else:
        up = alphas < c - _ALPHA_EPS
        down = alphas > _ALPHA_EPS
        violation = np.max(np.where(down, grad, -np.inf)) - np.min(np.where(up, grad, np.inf))
        if violation > threshold:
            raise NumericalError(
                f"SMO did not reach KKT tolerance after {max_iter} iterations "
                f"(violation {violation:.3e}, threshold {threshold:.3e})"
            )
        converged = True

    assert converged
    # grad_i == sum_j a_j k(x_j, x_i), the decision value of each training row
    margin = (alphas > _ALPHA_EPS) & (alphas < c - _ALPHA_EPS)
    support = alphas > _ALPHA_EPS
    if np.any(margin):
        rho = float(np.mean(grad[margin]))
    else:
        rho = float(np.median(grad[support]))
    return OcsvmModel(
        alphas=alphas,
        rho=rho,
        nu=float(nu),
        kernel=kernel,
        support_vectors=x[support].copy(),
        support_alphas=alphas[support].copy(),
        n_train=n,
        iterations=iterations,
    )


def ocsvm_score(model: OcsvmModel, x) -> np.ndarray:
    """Anomaly score per row: rho - sum_j a_j k(x_j, row); higher = more anomalous."""
    xv = as_array(x)
    if xv.shape[1] != model.support_vectors.shape[1]:
        raise ShapeError(
            f"dims mismatch: {xv.shape[1]} vs model {model.support_vectors.shape[1]}"
        )
    kx = gram(model.kernel, xv, model.support_vectors)
    return model.rho - kx @ model.support_alphas


def score_series(model: OcsvmModel, dataset) -> ScoreSeries:
    """Score a domain's test matrix and pair the result with its labels."""
    return ScoreSeries(scores=ocsvm_score(model, dataset.test), labels=dataset.test_labels)


@dataclass(frozen=True, eq=False)
class Standardizer:
    """Per-feature affine normalization fitted on source training data only."""

    mean: np.ndarray
    std: np.ndarray

    def apply(self, x) -> np.ndarray:
        xv = as_array(x)
        if xv.shape[1] != self.mean.shape[0]:
            raise ShapeError(f"dims mismatch: {xv.shape[1]} vs {self.mean.shape[0]}")
        return (xv - self.mean) / self.std


def fit_standardizer(train) -> Standardizer:
    x = as_array(train)
    std = x.std(axis=0)
    std = np.where(std > 1e-12, std, 1.0)  # constant features pass through
    return Standardizer(mean=x.mean(axis=0), std=std)


_KIND = "cdfg-ocsvm-model-1"


def save_ocsvm_model(model: OcsvmModel, path) -> None:
    save_container(
        path,
        _KIND,
        {
            "alphas": model.alphas,
            "rho": model.rho,
            "nu": model.nu,
            "kernel_kind": model.kernel.kind,
            "kernel_gamma": -1.0 if model.kernel.kind == "linear" else model.kernel.gamma,
            "support_vectors": model.support_vectors,
            "support_alphas": model.support_alphas,
            "n_train": model.n_train,
            "iterations": model.iterations,
        },
    )


def load_ocsvm_model(path) -> OcsvmModel:
    f = load_container(path, _KIND)
    kind = str(f["kernel_kind"])
    kernel = KernelSpec(kind, None if kind == "linear" else float(f["kernel_gamma"]))
    return OcsvmModel(
        alphas=f["alphas"],
        rho=float(f["rho"]),
        nu=float(f["nu"]),
        kernel=kernel,
        support_vectors=f["support_vectors"],
        support_alphas=f["support_alphas"],
        n_train=int(f["n_train"]),
        iterations=int(f["iterations"]),
    )
