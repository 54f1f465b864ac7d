"""The 19-layer feature extractor: penultimate fully-connected activations.

The classification head's final layer is tied to the pretraining task and
is dropped; what remains ends at the second 4096-wide fully-connected
layer, so every frame maps to a 4096-dimensional descriptor.

Weights come from one of three sources:

- ``"pretrained"``: the published ImageNet weights, fetched through the
  framework's cache.  Unavailable weights (offline environment) raise
  :class:`EnvError` rather than silently extracting garbage.
- ``"random"``: a seeded random initialization.  Descriptors are
  meaningless for detection but deterministic, which is what the format
  and pipeline contract tests need.
- a filesystem path to a ``state_dict`` checkpoint.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import torch
from torchvision.models import vgg19

from .errors import EnvError, IoError

INPUT_RESOLUTION = (224, 224)
FEATURE_DIM = 4096

# canonical input normalization used when the network was pretrained
_CHANNEL_MEAN = np.array([0.485, 0.456, 0.406], dtype=np.float32)
_CHANNEL_STD = np.array([0.229, 0.224, 0.225], dtype=np.float32)


def build_extractor(weights: str | Path = "pretrained", seed: int = 0) -> torch.nn.Module:
    """Construct the truncated network in deterministic eval mode."""
    if weights == "pretrained":
        try:
            from torchvision.models import VGG19_Weights

            model = vgg19(weights=VGG19_Weights.IMAGENET1K_V1)
        except Exception as exc:
            raise EnvError(
                f"pretrained weights are unavailable ({exc}); pass a local "
                "checkpoint path, or weights='random' for format-level work"
            ) from exc
    elif weights == "random":
        torch.manual_seed(seed)
        model = vgg19(weights=None)
    else:
        model = vgg19(weights=None)
        try:
            state = torch.load(weights, map_location="cpu", weights_only=True)
        except OSError as exc:
            raise IoError(f"cannot read checkpoint {weights}: {exc}") from exc
        except Exception as exc:
            raise EnvError(f"cannot load checkpoint {weights}: {exc}") from exc
        model.load_state_dict(state)
    model.classifier = model.classifier[:-1]  # drop the classification layer
    model.eval()
    return model


def preprocess(frames: np.ndarray) -> torch.Tensor:
    """Map a batch of H x W x 3 uint8 RGB frames to normalized NCHW tensors.

    Frames are resized to the fixed 224 x 224 input resolution bilinearly,
    scaled to [0, 1], and normalized per channel.
    """
    import cv2

    batch = np.empty((len(frames), 3, *INPUT_RESOLUTION), dtype=np.float32)
    for i, frame in enumerate(frames):
        resized = cv2.resize(
            frame, INPUT_RESOLUTION[::-1], interpolation=cv2.INTER_LINEAR
        ).astype(np.float32)
        scaled = (resized / 255.0 - _CHANNEL_MEAN) / _CHANNEL_STD
        batch[i] = scaled.transpose(2, 0, 1)
    return torch.from_numpy(batch)


@torch.no_grad()
def extract_features(model: torch.nn.Module, frames: list[np.ndarray], batch_size: int = 16) -> np.ndarray:
    """Forward frames through the truncated network; one row per frame."""
    rows = []
    for start in range(0, len(frames), batch_size):
        batch = preprocess(frames[start : start + batch_size])
        rows.append(model(batch).numpy().astype(np.float32))
    return np.vstack(rows)
