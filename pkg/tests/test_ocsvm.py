import numpy as np
import pytest

from cdfg.errors import ConfigError, DataError, NumericalError, ShapeError
from cdfg.kernels import KernelSpec, gram
from cdfg.ocsvm import (
    ScoreSeries,
    dual_objective,
    fit_standardizer,
    load_ocsvm_model,
    ocsvm_fit,
    ocsvm_score,
    save_ocsvm_model,
)

LIN = KernelSpec("linear")
RBF = KernelSpec("rbf", 0.5)


def project_box_simplex(x, c):
    """Project onto {0 <= a_i <= c, sum a = 1} by bisecting the shift."""
    lo, hi = x.min() - 1.0, x.max()
    for _ in range(60):
        lam = (lo + hi) / 2
        total = np.clip(x - lam, 0.0, c).sum()
        if total > 1.0:
            lo = lam
        else:
            hi = lam
    return np.clip(x - (lo + hi) / 2, 0.0, c)


def qp_oracle(q, nu, iters=8000, lr=None):
    """Projected-gradient reference solver for the dual, to ~1e-5."""
    n = q.shape[0]
    c = 1.0 / (nu * n)
    if lr is None:
        lr = 1.0 / max(np.linalg.eigvalsh(q).max(), 1e-12)
    a = project_box_simplex(np.full(n, 1.0 / n), c)
    for _ in range(iters):
        a = project_box_simplex(a - lr * (q @ a), c)
    return a


class TestFit:
    def test_two_identical_points_pinned(self):
        x = np.array([[1.0, 2.0], [1.0, 2.0]])
        for nu in (0.5, 0.8, 1.0):
            model = ocsvm_fit(x, nu=nu, kernel=LIN)
            np.testing.assert_allclose(model.alphas, [0.5, 0.5], atol=1e-9)

    def test_dual_feasibility(self):
        rng = np.random.default_rng(0)
        x = rng.standard_normal((50, 4))
        model = ocsvm_fit(x, nu=0.25, kernel=LIN)
        c = 1.0 / (0.25 * 50)
        assert model.alphas.sum() == pytest.approx(1.0, abs=1e-6)
        assert np.all(model.alphas >= -1e-9)
        assert np.all(model.alphas <= c + 1e-9)
        assert model.support_alphas.size > 0

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_matches_qp_oracle_n8(self, seed):
        rng = np.random.default_rng(seed)
        x = rng.standard_normal((8, 2)) + np.array([2.0, 1.0])
        q = gram(LIN, x, x)
        model = ocsvm_fit(x, nu=0.25, kernel=LIN)
        oracle = qp_oracle(q, nu=0.25)
        assert dual_objective(q, model.alphas) == pytest.approx(
            dual_objective(q, oracle), abs=1e-4
        )

    def test_nu_property(self):
        # rbf keeps the boundary non-degenerate on an origin-centered cloud
        rng = np.random.default_rng(4)
        x = rng.standard_normal((400, 6))
        model = ocsvm_fit(x, nu=0.25, kernel=KernelSpec("rbf", "median-heuristic"))
        outlier_fraction = float(np.mean(ocsvm_score(model, x) > 0))
        sv_fraction = float(np.mean(model.alphas > 1e-8))
        assert outlier_fraction <= 0.25 + 0.03
        assert sv_fraction >= 0.25 - 0.03

    def test_nu_property_linear_displaced(self):
        # linear needs the cloud away from the origin for a nonzero margin
        rng = np.random.default_rng(4)
        x = rng.standard_normal((400, 6)) + 4.0
        model = ocsvm_fit(x, nu=0.25, kernel=LIN)
        outlier_fraction = float(np.mean(ocsvm_score(model, x) > 0))
        sv_fraction = float(np.mean(model.alphas > 1e-8))
        assert outlier_fraction <= 0.25 + 0.03
        assert sv_fraction >= 0.25 - 0.03

    def test_determinism(self):
        rng = np.random.default_rng(5)
        x = rng.standard_normal((60, 5))
        a = ocsvm_fit(x, nu=0.3, kernel=RBF)
        b = ocsvm_fit(x.copy(), nu=0.3, kernel=RBF)
        np.testing.assert_array_equal(a.alphas, b.alphas)
        assert a.rho == b.rho

    def test_nonconvergence_reports_iterations(self):
        rng = np.random.default_rng(6)
        x = rng.standard_normal((40, 3))
        with pytest.raises(NumericalError, match="2 iterations"):
            ocsvm_fit(x, nu=0.25, kernel=LIN, max_iter=2)

    def test_bad_nu(self):
        with pytest.raises(ConfigError):
            ocsvm_fit(np.ones((4, 2)), nu=0.0)
        with pytest.raises(ConfigError):
            ocsvm_fit(np.ones((4, 2)), nu=1.5)

    def test_one_row(self):
        with pytest.raises(ConfigError):
            ocsvm_fit(np.ones((1, 2)))

    def test_median_gamma_resolved_on_train(self):
        rng = np.random.default_rng(7)
        x = rng.standard_normal((20, 3))
        model = ocsvm_fit(x, nu=0.5, kernel=KernelSpec("rbf", "median-heuristic"))
        assert isinstance(model.kernel.gamma, float) and model.kernel.gamma > 0


class TestScore:
    def test_margin_support_vector_scores_zero(self):
        rng = np.random.default_rng(8)
        x = rng.standard_normal((80, 4))
        model = ocsvm_fit(x, nu=0.25, kernel=RBF)
        c = 1.0 / (0.25 * 80)
        margin = (model.alphas > 1e-6) & (model.alphas < c - 1e-6)
        assert margin.any()
        scores = ocsvm_score(model, x[margin])
        assert np.abs(scores).max() < 1e-4

    def test_far_outlier_positive(self):
        # unit-norm cloud around e1; outlier far on the opposite side
        rng = np.random.default_rng(9)
        x = rng.standard_normal((60, 4)) * 0.1
        x[:, 0] += 1.0
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        model = ocsvm_fit(x, nu=0.25, kernel=LIN)
        outlier = -10.0 * x.mean(axis=0, keepdims=True)
        assert ocsvm_score(model, outlier)[0] > 0

    def test_centroid_scores_low(self):
        # small gamma keeps the kernel near-linear in squared distance, so
        # the score is lowest where the weighted mean distance is smallest
        rng = np.random.default_rng(10)
        x = rng.standard_normal((100, 3))
        model = ocsvm_fit(x, nu=0.25, kernel=KernelSpec("rbf", 0.02))
        centroid_score = ocsvm_score(model, x.mean(axis=0, keepdims=True))[0]
        train_scores = ocsvm_score(model, x)
        assert centroid_score < np.median(train_scores)

    def test_translation_rank_invariance_rbf(self):
        # shifts cancel inside pairwise distances, so the rbf detector's
        # ranking survives any constant offset
        rng = np.random.default_rng(11)
        train = rng.standard_normal((50, 5))
        test = rng.standard_normal((25, 5))
        c = np.array([4.0, -2.0, 0.5, 10.0, 1.0])

        def ranks(train_x, test_x):
            model = ocsvm_fit(train_x, nu=0.25, kernel=RBF)
            return np.argsort(np.argsort(ocsvm_score(model, test_x)))

        np.testing.assert_array_equal(ranks(train, test), ranks(train + c, test + c))

    def test_translation_rank_correlation_raw(self):
        # without standardization the boundary is origin-anchored; ranking is
        # only approximately preserved for a separable cloud
        rng = np.random.default_rng(12)
        train = rng.standard_normal((60, 5)) + 4.0
        test = rng.standard_normal((30, 5)) + 4.0
        c = np.full(5, 2.5)
        s1 = ocsvm_score(ocsvm_fit(train, nu=0.25, kernel=LIN), test)
        s2 = ocsvm_score(ocsvm_fit(train + c, nu=0.25, kernel=LIN), test + c)
        r1 = np.argsort(np.argsort(s1))
        r2 = np.argsort(np.argsort(s2))
        assert np.corrcoef(r1, r2)[0, 1] > 0.99

    def test_dims_mismatch(self):
        model = ocsvm_fit(np.random.default_rng(13).standard_normal((10, 3)))
        with pytest.raises(ShapeError):
            ocsvm_score(model, np.ones((2, 4)))


class TestStandardizer:
    def test_zero_mean_unit_std(self):
        rng = np.random.default_rng(15)
        x = rng.standard_normal((40, 3)) * 5 + 2
        z = fit_standardizer(x).apply(x)
        np.testing.assert_allclose(z.mean(axis=0), 0.0, atol=1e-12)
        np.testing.assert_allclose(z.std(axis=0), 1.0, atol=1e-12)

    def test_constant_feature_passthrough(self):
        x = np.column_stack([np.ones(10), np.arange(10.0)])
        z = fit_standardizer(x).apply(x)
        np.testing.assert_allclose(z[:, 0], 0.0, atol=1e-12)

    def test_absorbs_offsets(self):
        rng = np.random.default_rng(16)
        x = rng.standard_normal((30, 4))
        c = np.array([3.0, -1.0, 0.0, 8.0])
        a = fit_standardizer(x).apply(x)
        b = fit_standardizer(x + c).apply(x + c)
        np.testing.assert_allclose(a, b, atol=1e-10)


class TestScoreSeries:
    def test_length_mismatch(self):
        with pytest.raises(DataError):
            ScoreSeries(scores=[1.0, 2.0], labels=[1])

    def test_nonfinite_scores(self):
        with pytest.raises(DataError):
            ScoreSeries(scores=[1.0, np.nan], labels=[1, -1])

    def test_bad_labels(self):
        with pytest.raises(DataError):
            ScoreSeries(scores=[1.0, 2.0], labels=[1, 0])


def test_serialization_roundtrip(tmp_path):
    rng = np.random.default_rng(14)
    x = rng.standard_normal((30, 4))
    test = rng.standard_normal((10, 4))
    for spec in (LIN, RBF):
        model = ocsvm_fit(x, nu=0.4, kernel=spec)
        path = tmp_path / "detector.npz"
        save_ocsvm_model(model, path)
        back = load_ocsvm_model(path)
        assert back.kernel == model.kernel
        assert (back.rho, back.nu, back.n_train) == (model.rho, model.nu, model.n_train)
        np.testing.assert_array_equal(ocsvm_score(back, test), ocsvm_score(model, test))
