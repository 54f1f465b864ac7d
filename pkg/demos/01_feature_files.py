"""Feature files: the binary exchange format and its validation.

Creates a small synthetic domain pair, writes the matrices as `.featb`
files plus `.labels` files, reads them back bit-exactly, and pokes at the
failure modes the loader guards against.
"""

import struct
import tempfile
from pathlib import Path

import numpy as np

from cdfg import load_features, load_labels, make_synthetic_pair, save_features, save_labels
from cdfg.data import FEATB_MAGIC
from cdfg.errors import DataError, FormatError

work = Path(tempfile.mkdtemp(prefix="cdfg-demo-"))
print(f"working in {work}\n")

pair = make_synthetic_pair(seed=7, n_train=50, n_test=40, dims=6, shift=2.0, anomaly_offset=5.0)
print(f"source train: {pair.source.train.rows} x {pair.source.train.dims}")
print(f"target test:  {pair.target.test.rows} x {pair.target.test.dims}, "
      f"{int((pair.target.test_labels == 1).sum())} anomalous frames")

train_path = work / "source_train.featb"
labels_path = work / "target_test.labels"
save_features(pair.source.train, train_path)
save_labels(pair.target.test_labels, labels_path)

raw = train_path.read_bytes()
rows, dims = struct.unpack_from("<II", raw, len(FEATB_MAGIC))
print(f"\non disk: magic {raw[:8]!r}, rows={rows}, dims={dims}, "
      f"{len(raw) - 16} payload bytes ({rows * dims} float32 values)")

back = load_features(train_path)
print("round trip bit-exact:", bool(np.array_equal(back.values, pair.source.train.values)))
print("labels round trip:", bool(np.array_equal(load_labels(labels_path), pair.target.test_labels)))

print("\nloader guard rails:")
bad = work / "bad.featb"
bad.write_bytes(raw[:-4])  # drop the last value
try:
    load_features(bad)
except FormatError as exc:
    print(f"  truncated payload -> FormatError: {exc}")

payload = np.frombuffer(raw[16:], dtype="<f4").copy()
payload[3] = np.nan
bad.write_bytes(raw[:16] + payload.tobytes())
try:
    load_features(bad)
except DataError as exc:
    print(f"  NaN value -> DataError: {exc}")
