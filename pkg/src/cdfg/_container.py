"""Binary container for fitted models, built on the NumPy archive format."""

from __future__ import annotations

import numpy as np

from .errors import FormatError, IoError


def save_container(path, kind: str, fields: dict) -> None:
    arrays = {name: np.asarray(value) for name, value in fields.items()}
    try:
        with open(path, "wb") as fh:
            np.savez(fh, __kind__=np.asarray(kind), **arrays)
    except OSError as exc:
        raise IoError(f"cannot write model container {path}: {exc}") from exc


def load_container(path, kind: str) -> dict:
    try:
        with np.load(path, allow_pickle=False) as data:
            fields = {name: data[name] for name in data.files}
    except OSError as exc:
        raise IoError(f"cannot read model container {path}: {exc}") from exc
    except (ValueError, KeyError) as exc:
        raise FormatError(f"{path}: not a model container: {exc}") from exc
    tag = fields.pop("__kind__", None)
    if tag is None or str(tag) != kind:
        raise FormatError(f"{path}: container kind {tag} does not match expected {kind!r}")
    return fields
