"""Frame decoding: video containers and still-frame directories.

Frames come out as H x W x 3 uint8 RGB arrays, in container presentation
order for videos and in lexicographic name order for directories.
Directory names must be zero-padded so that lexicographic order equals
numeric order; a conflict is rejected rather than silently reordering the
clip.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

import cv2
import numpy as np

from .errors import DataError, FormatError, IoError

IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff")

_trailing_digits = re.compile(r"(\d+)\D*$")


def _check_zero_padded(names: list[str]) -> None:
    keyed = []
    for name in names:
        m = _trailing_digits.search(Path(name).stem)
        if m:
            keyed.append((int(m.group(1)), name))
    numeric = [name for _, name in sorted(keyed, key=lambda kv: (kv[0], kv[1]))]
    lexicographic = sorted(name for _, name in keyed)
    if numeric != lexicographic:
        raise FormatError(
            "frame names are not zero-padded: lexicographic order disagrees "
            "with their numeric order (e.g. frame10 sorting before frame2)"
        )


def iter_frames(path) -> Iterator[np.ndarray]:
    """Yield RGB frames from a video file or a directory of stills."""
    path = Path(path)
    if not path.exists():
        raise IoError(f"input {path} does not exist")
    if path.is_dir():
        yield from _iter_directory(path)
    else:
        yield from _iter_video(path)


def _iter_directory(path: Path) -> Iterator[np.ndarray]:
    names = sorted(p.name for p in path.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES)
    if not names:
        raise DataError(f"{path}: no frame images found")
    _check_zero_padded(names)
    for index, name in enumerate(names):
        bgr = cv2.imread(str(path / name), cv2.IMREAD_COLOR)
        if bgr is None:
            raise DataError(f"{path}: cannot decode frame {index} ({name})")
        yield cv2.cvtColor(bgr, cv2.COLOR_BGR2RGB)


def _iter_video(path: Path) -> Iterator[np.ndarray]:
    capture = cv2.VideoCapture(str(path))
    try:
        if not capture.isOpened():
            raise DataError(f"{path}: cannot open as a video")
        index = 0
        while True:
            ok, bgr = capture.read()
            if not ok:
                break
            if bgr is None or bgr.ndim != 3:
                raise DataError(f"{path}: cannot decode frame {index}")
            yield cv2.cvtColor(bgr, cv2.COLOR_BGR2RGB)
            index += 1
        if index == 0:
            raise DataError(f"{path}: no decodable frames")
    finally:
        capture.release()
