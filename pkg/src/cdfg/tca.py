"""Transfer component analysis: a shared latent space for two domains.

Both training sets (source first, then target) become the anchor set of a
composite Gram matrix

    K = [[K_SS, K_ST],
         [K_TS, K_TT]].

The fitted map maximizes variance of the embedded anchors while shrinking
the distance between the two domains' embedded means.  Writing L for the
mean-discrepancy coefficient matrix (L_ij = 1/n_s^2 for two source rows,
1/n_t^2 for two target rows, -1/(n_s n_t) across domains) and H for the
centering matrix I - (1/n) 1 1^T, the k transfer components are the top-k
eigenvectors W of

    (K L K + mu I)^(-1) K H K.

The inverse is never formed: K L K + mu I is symmetric positive definite
for mu > 0, so a Cholesky factorization reduces the problem to an ordinary
symmetric eigendecomposition.  Only training rows participate; the fit has
no access to test features or labels on either domain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from ._container import load_container, save_container
from .data import as_array
from .errors import ConfigError, NumericalError, ShapeError
from .kernels import MEDIAN_HEURISTIC, KernelSpec, fix_signs, gram, resolve_kernel


@dataclass(frozen=True, eq=False)
class TcaModel:
    """Fitted transfer map: anchors, resolved kernel, and coefficients W.

    Columns of `coeffs` are ordered by descending eigenvalue of the solved
    operator; `anchors` stacks the source training rows above the target
    training rows.
    """

    anchors: np.ndarray
    kernel: KernelSpec
    mu: float
    coeffs: np.ndarray
    n_source: int
    n_target: int
    eigenvalues: np.ndarray

    @property
    def k(self) -> int:
        return self.coeffs.shape[1]


def mmd_coefficients(n_source: int, n_target: int) -> np.ndarray:
    """The rank-one coefficient matrix L = e e^T with e = (1/n_s, ..., -1/n_t, ...)."""
    e = np.concatenate(
        [np.full(n_source, 1.0 / n_source), np.full(n_target, -1.0 / n_target)]
    )
    return np.outer(e, e)


def tca_fit(
    source_train,
    target_train,
    kernel: KernelSpec | None = None,
    k: int = 80,
    mu: float = 1.0,
) -> TcaModel:
    """Learn k transfer components from the two training sets.

    Parameters
    ----------
    source_train, target_train
        Training matrices over the same descriptor set, at least 2 rows each.
    kernel
        Kernel for the composite Gram matrix; defaults to rbf with the
        median-heuristic bandwidth computed over the concatenated anchors.
    k
        Embedding dimensionality, at most n_source + n_target.
    mu
        Trade-off regularizer, must be positive.
    """
    xs = as_array(source_train)
    xt = as_array(target_train)
    if xs.shape[1] != xt.shape[1]:
        raise ShapeError(f"dims mismatch: source {xs.shape[1]} vs target {xt.shape[1]}")
    ns, nt = xs.shape[0], xt.shape[0]
    if ns < 2 or nt < 2:
        raise ConfigError(f"both training sets need >= 2 rows, got {ns} and {nt}")
    n = ns + nt
    if not 1 <= k <= n:
        raise ConfigError(f"k={k} out of range, need 1 <= k <= n_source+n_target={n}")
    if not mu > 0:
        raise ConfigError(f"mu must be positive, got {mu}")

    if kernel is None:
        kernel = KernelSpec("rbf", MEDIAN_HEURISTIC)
    anchors = np.vstack([xs, xt])
    kernel = resolve_kernel(kernel, anchors)

    kmat = gram(kernel, anchors, anchors)
    # K L K is rank one: L = e e^T, so K L K = (K e)(K e)^T.
    e = np.concatenate([np.full(ns, 1.0 / ns), np.full(nt, -1.0 / nt)])
    ke = kmat @ e
    klk = np.outer(ke, ke)
    hk = kmat - kmat.mean(axis=0, keepdims=True)  # H K
    khk = kmat @ hk
    khk = (khk + khk.T) / 2.0

    a = klk + mu * np.eye(n)
    try:
        chol = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:  # unreachable for mu > 0, guarded anyway
        raise NumericalError(f"K L K + mu I is not positive definite: {exc}") from exc

    # (K L K + mu I)^(-1) K H K  ->  C^(-1) (K H K) C^(-T) via the Cholesky factor
    half = solve_triangular(chol, khk, lower=True)
    reduced = solve_triangular(chol, half.T, lower=True).T
    reduced = (reduced + reduced.T) / 2.0
    w, v = np.linalg.eigh(reduced)
    order = np.argsort(w)[::-1][:k]
    coeffs = solve_triangular(chol.T, v[:, order], lower=False)
    coeffs = fix_signs(coeffs)
    return TcaModel(
        anchors=anchors,
        kernel=kernel,
        mu=float(mu),
        coeffs=coeffs,
        n_source=ns,
        n_target=nt,
        eigenvalues=w[order],
    )


def tca_transform(model: TcaModel, x) -> np.ndarray:
    """Embed rows of `x`: kernel evaluations against the anchors times W."""
    xv = as_array(x)
    if xv.shape[1] != model.anchors.shape[1]:
        raise ShapeError(f"dims mismatch: {xv.shape[1]} vs anchors {model.anchors.shape[1]}")
    kx = gram(model.kernel, xv, model.anchors)
    return kx @ model.coeffs


def mmd_sq(a_emb, b_emb) -> float:
    """Squared distance between the two embeddings' mean vectors."""
    av = as_array(a_emb)
    bv = as_array(b_emb)
    if av.shape[1] != bv.shape[1]:
        raise ShapeError(f"embedded dims mismatch: {av.shape[1]} vs {bv.shape[1]}")
    diff = av.mean(axis=0) - bv.mean(axis=0)
    return float(diff @ diff)


_KIND = "cdfg-tca-model-1"


def save_tca_model(model: TcaModel, path) -> None:
    save_container(
        path,
        _KIND,
        {
            "anchors": model.anchors,
            "kernel_kind": model.kernel.kind,
            "kernel_gamma": -1.0 if model.kernel.kind == "linear" else model.kernel.gamma,
            "mu": model.mu,
            "coeffs": model.coeffs,
            "n_source": model.n_source,
            "n_target": model.n_target,
            "eigenvalues": model.eigenvalues,
        },
    )


def load_tca_model(path) -> TcaModel:
    f = load_container(path, _KIND)
    kind = str(f["kernel_kind"])
    kernel = KernelSpec(kind, None if kind == "linear" else float(f["kernel_gamma"]))
    return TcaModel(
        anchors=f["anchors"],
        kernel=kernel,
        mu=float(f["mu"]),
        coeffs=f["coeffs"],
        n_source=int(f["n_source"]),
        n_target=int(f["n_target"]),
        eigenvalues=f["eigenvalues"],
    )
