"""Luma conversion with the exact 0.299 / 0.587 / 0.114 weighting."""

from __future__ import annotations

import numpy as np

from .errors import FormatError

WEIGHTS = (0.299, 0.587, 0.114)


def to_grayscale(frame: np.ndarray) -> np.ndarray:
    """Convert an RGB frame to grayscale, replicated back to 3 channels.

    Intensity is 0.299 R + 0.587 G + 0.114 B, rounded half-up to the
    nearest level, so downstream network input stays 3-channel.
    """
    arr = np.asarray(frame)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise FormatError(f"expected an H x W x 3 frame, got shape {arr.shape}")
    r, g, b = (arr[:, :, i].astype(np.float64) for i in range(3))
    luma = WEIGHTS[0] * r + WEIGHTS[1] * g + WEIGHTS[2] * b
    levels = np.floor(luma + 0.5).astype(arr.dtype)
    return np.repeat(levels[:, :, None], 3, axis=2)
