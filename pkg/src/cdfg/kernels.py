"""Kernel functions, Gram-matrix assembly and centering, symmetric eigensolver.

Both projection methods (PCA on the Gram side, TCA) are built on the small
set of primitives here: pairwise kernel evaluation, Gram matrices with a
deterministic symmetrization, the double-centering map K -> H K H, and a
descending symmetric eigendecomposition with a fixed sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import as_array
from .errors import ConfigError, DataError, DegenerateError, ShapeError

MEDIAN_HEURISTIC = "median-heuristic"

_KINDS = ("linear", "rbf")


@dataclass(frozen=True)
class KernelSpec:
    """Kernel choice: 'linear' (dot product) or 'rbf' (exp(-gamma * ||x-y||^2)).

    For the rbf kernel, gamma is either a positive real or the literal
    string 'median-heuristic', to be resolved against data before any Gram
    matrix is assembled (see :func:`resolve_kernel`).
    """

    kind: str
    gamma: float | str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ConfigError(f"unknown kernel kind {self.kind!r}, expected one of {_KINDS}")
        if self.kind == "linear":
            if self.gamma is not None:
                raise ConfigError("linear kernel takes no gamma")
        else:
            if self.gamma == MEDIAN_HEURISTIC:
                return
            if not isinstance(self.gamma, (int, float)) or not self.gamma > 0:
                raise ConfigError(
                    f"rbf gamma must be a positive real or {MEDIAN_HEURISTIC!r}, got {self.gamma!r}"
                )

    @property
    def resolved(self) -> bool:
        return self.kind == "linear" or isinstance(self.gamma, (int, float))


def resolve_kernel(spec: KernelSpec, data) -> KernelSpec:
    """Replace a median-heuristic gamma with its numeric value for `data`."""
    if spec.resolved:
        return spec
    return KernelSpec("rbf", median_heuristic_gamma(data))


def _require_resolved(spec: KernelSpec):
    if not spec.resolved:
        raise ConfigError(
            "kernel gamma is still 'median-heuristic'; call resolve_kernel() with data first"
        )


def kernel_eval(spec: KernelSpec, x, y) -> float:
    """Evaluate the kernel on two vectors of equal length."""
    _require_resolved(spec)
    xv = np.asarray(x, dtype=np.float64).ravel()
    yv = np.asarray(y, dtype=np.float64).ravel()
    if xv.shape != yv.shape:
        raise ShapeError(f"vector lengths differ: {xv.shape[0]} vs {yv.shape[0]}")
    if spec.kind == "linear":
        return float(xv @ yv)
    d2 = float(np.sum((xv - yv) ** 2))
    return float(np.exp(-spec.gamma * d2))


def _sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # ||a_i||^2 + ||b_j||^2 - 2 a_i . b_j, clipped: rounding can go negative
    an = np.sum(a * a, axis=1)
    bn = np.sum(b * b, axis=1)
    d2 = an[:, None] + bn[None, :] - 2.0 * (a @ b.T)
    return np.maximum(d2, 0.0)


def gram(spec: KernelSpec, a, b) -> np.ndarray:
    """Gram matrix G[i, j] = k(a_i, b_j).

    When `a` and `b` are the same object the result is exactly symmetric
    with, for the rbf kernel, an exact unit diagonal.
    """
    _require_resolved(spec)
    av = as_array(a)
    bv = as_array(b)
    if av.shape[1] != bv.shape[1]:
        raise ShapeError(f"dims mismatch: {av.shape[1]} vs {bv.shape[1]}")
    same = av is bv
    if spec.kind == "linear":
        g = av @ bv.T
    else:
        d2 = _sq_dists(av, bv)
        if same:
            np.fill_diagonal(d2, 0.0)
        g = np.exp(-spec.gamma * d2)
    if same:
        g = (g + g.T) / 2.0
    return g


def median_heuristic_gamma(a, max_rows: int = 2000, seed: int = 0) -> float:
    """Bandwidth gamma = 1 / (2 m^2), m the median pairwise distance.

    The median is exact over all distinct row pairs when the matrix has at
    most `max_rows` rows, and otherwise taken over a seeded subsample of
    `max_rows` rows so the result stays deterministic.
    """
    av = as_array(a)
    if av.shape[0] < 2:
        raise ShapeError(f"need at least 2 rows, got {av.shape[0]}")
    if av.shape[0] > max_rows:
        idx = np.sort(np.random.default_rng(seed).choice(av.shape[0], max_rows, replace=False))
        av = av[idx]
    d2 = _sq_dists(av, av)
    iu = np.triu_indices(av.shape[0], k=1)
    m = float(np.median(np.sqrt(d2[iu])))
    if m <= 0.0:
        raise DegenerateError("median pairwise distance is zero (all rows identical)")
    return 1.0 / (2.0 * m * m)


def _check_symmetric(m: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    asym = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    if asym > tol * max(scale, 1e-300):
        raise ShapeError(f"matrix is not symmetric: max asymmetry {asym:.3e} at scale {scale:.3e}")
    return (m + m.T) / 2.0


def center_gram(k) -> np.ndarray:
    """Double-center a symmetric Gram matrix: H K H with H = I - (1/n) 1 1^T.

    Output row and column sums vanish; the map is idempotent.
    """
    kv = _check_symmetric(np.asarray(k, dtype=np.float64))
    row = kv.mean(axis=1, keepdims=True)
    col = kv.mean(axis=0, keepdims=True)
    total = kv.mean()
    out = kv - row - col + total
    return (out + out.T) / 2.0


def validate_gram(k, sym_tol: float = 1e-9, psd_tol: float = -1e-7) -> None:
    """Check the Gram-matrix invariants: symmetry and near-PSD spectrum."""
    kv = _check_symmetric(np.asarray(k, dtype=np.float64), tol=sym_tol)
    w = np.linalg.eigvalsh(kv)
    scale = max(float(np.max(np.abs(w))), 1.0)
    if float(w.min()) < psd_tol * scale:
        raise DataError(f"Gram matrix is not PSD: min eigenvalue {w.min():.3e}")


def sym_eig_desc(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix, eigenvalues descending.

    The input is symmetrized as (M + M^T)/2 after a symmetry check.
    Eigenvectors are orthonormal columns; each is oriented so its
    largest-magnitude component (first such, on ties) is positive, which
    makes the decomposition deterministic for non-degenerate spectra.
    """
    mv = _check_symmetric(np.asarray(m, dtype=np.float64))
    w, v = np.linalg.eigh(mv)
    order = np.argsort(w)[::-1]
    w = w[order]
    v = v[:, order]
    return w, fix_signs(v)


def fix_signs(v: np.ndarray) -> np.ndarray:
    """Flip column signs so each column's largest-|entry| component is positive."""
    v = np.array(v)
    for j in range(v.shape[1]):
        i = int(np.argmax(np.abs(v[:, j])))
        if v[i, j] < 0:
            v[:, j] = -v[:, j]
    return v
