"""The one-class detector and frame-level metrics.

Shows the nu parameter doing its job (an upper bound on the training
outlier fraction, a lower bound on the support-vector fraction), then
scores a labeled test set and walks the ROC curve to AUC and the equal
error rate.
"""

import numpy as np

from cdfg import KernelSpec, ScoreSeries, auc, eer, ocsvm_fit, ocsvm_score, roc

rng = np.random.default_rng(0)
train = rng.standard_normal((300, 5))
kernel = KernelSpec("rbf", "median-heuristic")

print("nu controls the outlier budget (n=300, rbf median-heuristic kernel):")
print("  nu    outliers  support vectors")
for nu in (0.05, 0.1, 0.25, 0.5):
    model = ocsvm_fit(train, nu=nu, kernel=kernel)
    outliers = float(np.mean(ocsvm_score(model, train) > 0))
    support = float(np.mean(model.alphas > 1e-8))
    print(f"  {nu:4.2f}  {outliers:8.3f}  {support:15.3f}")

# labeled test set: half normal, half displaced anomalies
normals = rng.standard_normal((100, 5))
anomalies = rng.standard_normal((100, 5)) + np.array([0, 4.0, 0, 0, 0])
scores = ocsvm_score(ocsvm_fit(train, nu=0.25, kernel=kernel), np.vstack([normals, anomalies]))
labels = np.concatenate([np.full(100, -1), np.full(100, 1)])

series = ScoreSeries(scores=scores, labels=labels)
curve = roc(series)
print(f"\nROC over {len(curve.points)} thresholds, from (0,0) to (1,1)")
print(f"  AUC {auc(curve) * 100:.2f}%   EER {eer(curve) * 100:.2f}%")

mid = len(curve.points) // 2
f, t = curve.points[mid]
print(f"  operating point at threshold {curve.thresholds[mid]:+.4f}: "
      f"fpr {f:.2f}, tpr {t:.2f}")
