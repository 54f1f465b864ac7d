"""Writers for the canonical feature/label exchange formats.

`.featb`: magic ``FEATB1\\0\\0``, rows and dims as little-endian uint32,
then rows x dims float32 little-endian, row-major.  `.labels`: one ``+1``
(anomaly) or ``-1`` (normal) per line, UTF-8.  These match the detection
toolkit's loaders byte for byte; the contract tests validate emitted files
through that toolkit's CLI.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import DataError, IoError

FEATB_MAGIC = b"FEATB1\x00\x00"
_HEADER = struct.Struct("<II")


def write_features(values: np.ndarray, path) -> None:
    arr = np.ascontiguousarray(values, dtype="<f4")
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DataError(f"feature payload must be a non-empty 2-d matrix, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DataError("feature payload contains non-finite values")
    try:
        with open(path, "wb") as fh:
            fh.write(FEATB_MAGIC)
            fh.write(_HEADER.pack(arr.shape[0], arr.shape[1]))
            fh.write(arr.tobytes())
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_labels(labels: np.ndarray, path) -> None:
    arr = np.asarray(labels, dtype=np.int64).ravel()
    if not np.all(np.isin(arr, (-1, 1))):
        raise DataError("labels must be +1 or -1")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.writelines(f"{v}\n" for v in arr)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
