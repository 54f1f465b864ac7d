"""Projections and the domain gap.

Fits PCA (source-only statistics, reused across domains) and the transfer
map (both training sets, shared latent space) on a shifted synthetic pair,
then compares how far apart the two domains' embedded means end up.  The
gap is reported scaled by the embedding's total variance so differently
scaled embeddings are comparable.
"""

import numpy as np

from cdfg import make_synthetic_pair, mmd_sq, pca_fit, pca_transform, tca_fit, tca_transform

def scaled_gap(emb_a, emb_b):
    total = float(np.sum(np.var(np.vstack([emb_a, emb_b]), axis=0)))
    return mmd_sq(emb_a, emb_b) / total

pair = make_synthetic_pair(seed=7, n_train=200, n_test=200, dims=8, shift=3.0, anomaly_offset=6.0)
src, tgt = pair.source, pair.target

raw_gap = scaled_gap(src.train.values, tgt.train.values)
print(f"raw feature space: scaled mean gap {raw_gap:.4f}")

pca = pca_fit(src.train, k=2)
print(f"\nPCA (fit on source only, k=2): cumulative variance {pca.cumulative_variance:.4f}")
pca_gap = scaled_gap(pca_transform(pca, src.train), pca_transform(pca, tgt.train))
print(f"  scaled mean gap after projection: {pca_gap:.4f}")
print("  the shift direction carries the most variance, so source-only PCA keeps the gap")

tca = tca_fit(src.train, tgt.train, k=2, mu=1.0)
print(f"\ntransfer map (fit on both training sets, k=2, rbf gamma "
      f"{tca.kernel.gamma:.4f} via median heuristic)")
tca_gap = scaled_gap(tca_transform(tca, src.train), tca_transform(tca, tgt.train))
print(f"  scaled mean gap after embedding: {tca_gap:.6f}")
print(f"  leading eigenvalues of the variance-vs-gap operator: "
      f"{np.round(tca.eigenvalues[:2], 3)}")

print(f"\ngap shrink vs raw:  pca x{raw_gap / pca_gap:.2f},  tca x{raw_gap / tca_gap:.0f}")
