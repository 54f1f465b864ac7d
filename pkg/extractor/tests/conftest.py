from pathlib import Path

import cv2
import numpy as np
import pytest


def write_frame_dir(path: Path, count: int = 3, size=(24, 32), seed: int = 0,
                    duplicate_last: bool = False) -> Path:
    """Create a directory of zero-padded PNG frames."""
    path.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    frames = [rng.integers(0, 256, size=(*size, 3), dtype=np.uint8) for _ in range(count)]
    if duplicate_last:
        frames.append(frames[-1].copy())
    for i, frame in enumerate(frames):
        assert cv2.imwrite(str(path / f"frame_{i:04d}.png"), cv2.cvtColor(frame, cv2.COLOR_RGB2BGR))
    return path


@pytest.fixture(scope="session")
def random_model():
    from framefeat.network import build_extractor

    return build_extractor(weights="random", seed=0)
