"""End-to-end extraction: decode, preprocess, embed, write files."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .featfile import write_features, write_labels
from .frames import iter_frames
from .grayscale import to_grayscale
from .network import INPUT_RESOLUTION, build_extractor, extract_features


@dataclass(frozen=True)
class ExtractionJob:
    """One input clip (video file or frame directory) and its outputs.

    The network input resolution is fixed at 224 x 224; `anomalous_ranges`
    marks 0-based frame index ranges (inclusive) as +1 in the label file,
    everything else as -1.
    """

    input_path: Path
    feature_path: Path
    label_path: Path | None = None
    grayscale: bool = False
    weights: str = "pretrained"
    seed: int = 0
    batch_size: int = 16
    anomalous_ranges: tuple[tuple[int, int], ...] = ()

    @property
    def resolution(self) -> tuple[int, int]:
        return INPUT_RESOLUTION


def parse_ranges(text: str) -> tuple[tuple[int, int], ...]:
    """Parse '10-20,35' into ((10, 20), (35, 35))."""
    ranges = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, _, hi = part.partition("-")
        try:
            lo_i = int(lo)
            hi_i = int(hi) if hi else lo_i
        except ValueError as exc:
            raise ConfigError(f"bad frame range {part!r}") from exc
        if lo_i < 0 or hi_i < lo_i:
            raise ConfigError(f"bad frame range {part!r}")
        ranges.append((lo_i, hi_i))
    return tuple(ranges)


def extract(job: ExtractionJob) -> int:
    """Run the job; returns the number of frames written."""
    frames = []
    for frame in iter_frames(job.input_path):
        frames.append(to_grayscale(frame) if job.grayscale else frame)

    model = build_extractor(weights=job.weights, seed=job.seed)
    features = extract_features(model, frames, batch_size=job.batch_size)
    write_features(features, job.feature_path)

    if job.label_path is not None:
        labels = np.full(len(frames), -1, dtype=np.int64)
        for lo, hi in job.anomalous_ranges:
            if lo >= len(frames):
                raise ConfigError(
                    f"anomalous range {lo}-{hi} is beyond the last frame index {len(frames) - 1}"
                )
            labels[lo : hi + 1] = 1
        write_labels(labels, job.label_path)
    return len(frames)
