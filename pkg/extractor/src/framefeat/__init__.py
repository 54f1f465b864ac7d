"""Per-frame deep-feature extraction into canonical `.featb` files."""

from .errors import ConfigError, DataError, EnvError, FormatError, FramefeatError, IoError
from .extract import ExtractionJob, extract, parse_ranges
from .featfile import write_features, write_labels
from .frames import iter_frames
from .grayscale import to_grayscale
from .network import FEATURE_DIM, INPUT_RESOLUTION, build_extractor, extract_features

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DataError",
    "EnvError",
    "ExtractionJob",
    "FEATURE_DIM",
    "FormatError",
    "FramefeatError",
    "INPUT_RESOLUTION",
    "IoError",
    "build_extractor",
    "extract",
    "extract_features",
    "iter_frames",
    "parse_ranges",
    "to_grayscale",
    "write_features",
    "write_labels",
]
