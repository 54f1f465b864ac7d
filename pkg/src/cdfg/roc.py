"""Frame-level ROC construction, AUC, and equal error rate.

The positive class is label +1 (anomaly); a frame is predicted positive
when its score is at or above the threshold.  The curve has one point per
distinct score value, sweeping thresholds from +inf downward, so tied
scores collapse into a single point and produce diagonal segments under
trapezoidal integration (the tie-corrected convention).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .ocsvm import ScoreSeries


@dataclass(frozen=True, eq=False)
class RocCurve:
    """ROC polyline from (0, 0) to (1, 1), fpr and tpr both nondecreasing.

    `thresholds[i]` is the decision threshold producing `points[i]`;
    the initial (0, 0) point carries +inf.
    """

    points: np.ndarray
    thresholds: np.ndarray

    @property
    def fpr(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def tpr(self) -> np.ndarray:
        return self.points[:, 1]


def roc(series: ScoreSeries) -> RocCurve:
    """Build the ROC curve of a score series; needs both classes present."""
    scores = series.scores
    labels = series.labels
    n_pos = int(np.sum(labels == 1))
    n_neg = int(np.sum(labels == -1))
    if n_pos == 0 or n_neg == 0:
        raise DataError("ROC needs at least one anomalous and one normal frame")

    order = np.argsort(-scores, kind="stable")
    s = scores[order]
    pos = (labels[order] == 1).astype(np.int64)

    # one point at the end of each group of tied scores
    last_of_group = np.ones(s.shape[0], dtype=bool)
    last_of_group[:-1] = s[:-1] != s[1:]
    tp = np.cumsum(pos)[last_of_group]
    totals = np.flatnonzero(last_of_group) + 1
    fp = totals - tp

    points = np.empty((tp.shape[0] + 1, 2))
    points[0] = (0.0, 0.0)
    points[1:, 0] = fp / n_neg
    points[1:, 1] = tp / n_pos
    thresholds = np.concatenate([[np.inf], s[last_of_group]])
    return RocCurve(points=points, thresholds=thresholds)


def auc(curve: RocCurve) -> float:
    """Trapezoidal area under the (fpr, tpr) polyline."""
    f = curve.fpr
    t = curve.tpr
    return float(np.sum((f[1:] - f[:-1]) * (t[1:] + t[:-1]) / 2.0))


def eer(curve: RocCurve) -> float:
    """FPR where the ROC polyline crosses the line tpr = 1 - fpr.

    fpr + tpr is nondecreasing along the curve from 0 to 2, so the first
    segment on which it reaches 1 brackets the crossing; the exact point is
    found by linear interpolation (a vertex exactly on the line is returned
    as is).
    """
    f = curve.fpr
    t = curve.tpr
    sums = f + t
    for i in range(len(sums)):
        if sums[i] == 1.0:
            return float(f[i])
        if sums[i] > 1.0:
            # crossing lies strictly inside segment (i-1, i)
            df = f[i] - f[i - 1]
            dt = t[i] - t[i - 1]
            frac = (1.0 - sums[i - 1]) / (df + dt)
            return float(f[i - 1] + frac * df)
    return 1.0  # unreachable: the curve ends at (1, 1)
