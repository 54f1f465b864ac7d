"""Core data types and canonical feature-file I/O.

The pipeline's universal currency is the :class:`FeatureMatrix`, an
immutable n x d matrix of per-frame descriptors.  Matrices travel between
programs as ``.featb`` files: magic bytes ``FEATB1\\0\\0``, row and column
counts as little-endian uint32, then the payload as little-endian float32,
row-major.  Frame labels travel as ``.labels`` files, one ``+1`` (anomaly)
or ``-1`` (normal) per line.

Because the on-disk payload is float32, matrices produced by this module
(including the synthetic generator) are quantized to float32 values so that
save/load round-trips are bit-exact.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, DataError, FormatError, IoError, ShapeError

FEATB_MAGIC = b"FEATB1\x00\x00"
_HEADER = struct.Struct("<II")


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Immutable n x d matrix of real-valued frame descriptors.

    Invariants enforced at construction: two-dimensional, at least one row
    and one column, every entry finite.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise ShapeError(f"feature matrix must be 2-d, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DataError(f"feature matrix must be at least 1x1, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DataError("feature matrix contains non-finite values")
        object.__setattr__(self, "values", _frozen_array(arr, np.float64))

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def dims(self) -> int:
        return self.values.shape[1]


def as_array(m) -> np.ndarray:
    """Coerce a FeatureMatrix or array-like to a float64 2-d ndarray."""
    if isinstance(m, FeatureMatrix):
        return m.values
    arr = np.asarray(m, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got ndim={arr.ndim}")
    return arr


def quantize_f32(arr: np.ndarray) -> np.ndarray:
    """Round values through float32 so they survive `.featb` round-trips."""
    return np.asarray(arr, dtype=np.float32).astype(np.float64)


def save_features(m: FeatureMatrix, path) -> None:
    """Write a matrix to `path` in the canonical binary format.

    The payload is float32; values already representable in float32 (all
    matrices produced by this package) round-trip bit-exactly.
    """
    arr = as_array(m)
    payload = np.ascontiguousarray(arr, dtype="<f4")
    try:
        with open(path, "wb") as fh:
            fh.write(FEATB_MAGIC)
            fh.write(_HEADER.pack(arr.shape[0], arr.shape[1]))
            fh.write(payload.tobytes())
    except OSError as exc:
        raise IoError(f"cannot write feature file {path}: {exc}") from exc


def load_features(path) -> FeatureMatrix:
    """Read and validate a `.featb` file."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read feature file {path}: {exc}") from exc
    if len(raw) < len(FEATB_MAGIC) + _HEADER.size:
        raise FormatError(f"{path}: file shorter than the fixed header")
    if raw[: len(FEATB_MAGIC)] != FEATB_MAGIC:
        raise FormatError(f"{path}: bad magic bytes, not a feature file")
    rows, dims = _HEADER.unpack_from(raw, len(FEATB_MAGIC))
    if rows < 1 or dims < 1:
        raise FormatError(f"{path}: header declares empty matrix {rows}x{dims}")
    body = raw[len(FEATB_MAGIC) + _HEADER.size :]
    expected = rows * dims * 4
    if len(body) != expected:
        raise FormatError(
            f"{path}: payload holds {len(body)} bytes, header requires {expected}"
        )
    values = np.frombuffer(body, dtype="<f4").reshape(rows, dims)
    if not np.all(np.isfinite(values)):
        raise DataError(f"{path}: payload contains non-finite values")
    return FeatureMatrix(values)


def save_labels(labels, path) -> None:
    """Write per-frame labels (+1 anomaly, -1 normal), one per line."""
    arr = np.asarray(labels, dtype=np.int64).ravel()
    if not np.all(np.isin(arr, (-1, 1))):
        raise DataError("labels must be +1 or -1")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.writelines(f"{v}\n" for v in arr)
    except OSError as exc:
        raise IoError(f"cannot write label file {path}: {exc}") from exc


def load_labels(path) -> np.ndarray:
    """Read a `.labels` file into an int array of +1/-1 values."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read label file {path}: {exc}") from exc
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            v = int(line)
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: not an integer label: {line!r}") from exc
        if v not in (-1, 1):
            raise DataError(f"{path}:{lineno}: label must be +1 or -1, got {v}")
        values.append(v)
    if not values:
        raise FormatError(f"{path}: label file is empty")
    return np.asarray(values, dtype=np.int64)


def import_features_csv(path) -> FeatureMatrix:
    """Import a plain CSV of floats as a matrix.

    Convenience path only: text is lossy relative to the binary format.
    """
    rows = []
    width = None
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read csv {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise FormatError(f"{path}:{lineno}: expected {width} columns, got {len(fields)}")
        try:
            rows.append([float(f) for f in fields])
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-numeric value") from exc
    if not rows:
        raise FormatError(f"{path}: no data rows")
    return FeatureMatrix(np.asarray(rows))


@dataclass(frozen=True, eq=False)
class DomainDataset:
    """A named domain: normal-only training features plus a labeled test set."""

    name: str
    train: FeatureMatrix
    test: FeatureMatrix
    test_labels: np.ndarray

    def __post_init__(self):
        if self.train.dims != self.test.dims:
            raise ShapeError(
                f"domain {self.name!r}: train dims {self.train.dims} != test dims {self.test.dims}"
            )
        labels = np.asarray(self.test_labels, dtype=np.int64).ravel()
        if labels.shape[0] != self.test.rows:
            raise DataError(
                f"domain {self.name!r}: {labels.shape[0]} labels for {self.test.rows} test rows"
            )
        if not np.all(np.isin(labels, (-1, 1))):
            raise DataError(f"domain {self.name!r}: labels must be +1 or -1")
        if not (np.any(labels == 1) and np.any(labels == -1)):
            raise DataError(
                f"domain {self.name!r}: test set needs both classes for AUC/EER"
            )
        object.__setattr__(self, "test_labels", _frozen_array(labels, np.int64))

    @property
    def dims(self) -> int:
        return self.train.dims


@dataclass(frozen=True, eq=False)
class DomainPair:
    """An ordered (source, target) pair over the same descriptor set."""

    source: DomainDataset
    target: DomainDataset

    def __post_init__(self):
        if self.source.dims != self.target.dims:
            raise ShapeError(
                f"pair ({self.source.name}, {self.target.name}): descriptor sets differ "
                f"({self.source.dims} vs {self.target.dims} dims)"
            )


def make_synthetic_pair(
    seed: int,
    n_train: int,
    n_test: int,
    dims: int,
    shift: float,
    anomaly_offset: float,
) -> DomainPair:
    """Generate a deterministic two-domain dataset at desk scale.

    Source normals are N(0, I).  Target normals are N(shift * u, I) for the
    fixed unit direction u = e0.  Anomalies are normals displaced by
    `anomaly_offset` along the orthogonal direction v = e1; exactly half of
    each test set is anomalous (normal rows first, then anomalous rows).

    Parameters
    ----------
    seed : int
        PRNG seed; identical arguments produce identical datasets.
    n_train, n_test : int
        Rows per training / test set.  n_test must be even so the test
        split is exactly half anomalous.
    dims : int
        Feature dimensionality, at least 2.
    shift : float
        Domain gap between source and target normal populations.
    anomaly_offset : float
        Displacement of anomalies, must be positive.
    """
    if n_train < 2:
        raise ConfigError(f"n_train must be >= 2, got {n_train}")
    if n_test < 4 or n_test % 2 != 0:
        raise ConfigError(f"n_test must be an even count >= 4, got {n_test}")
    if dims < 2:
        raise ConfigError(f"dims must be >= 2, got {dims}")
    if not anomaly_offset > 0:
        raise ConfigError(f"anomaly_offset must be positive, got {anomaly_offset}")

    rng = np.random.default_rng(seed)
    u = np.zeros(dims)
    u[0] = 1.0
    v = np.zeros(dims)
    v[1] = 1.0

    half = n_test // 2

    def draw(center, n):
        return center + rng.standard_normal((n, dims))

    def domain(name, center):
        train = draw(center, n_train)
        test_normal = draw(center, half)
        test_anom = draw(center, half) + anomaly_offset * v
        test = np.vstack([test_normal, test_anom])
        labels = np.concatenate([np.full(half, -1), np.full(half, 1)])
        return DomainDataset(
            name=name,
            train=FeatureMatrix(quantize_f32(train)),
            test=FeatureMatrix(quantize_f32(test)),
            test_labels=labels,
        )

    source = domain("source", np.zeros(dims))
    target = domain("target", shift * u)
    return DomainPair(source=source, target=target)
