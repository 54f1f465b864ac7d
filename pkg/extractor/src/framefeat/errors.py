"""Errors raised by the extraction pipeline."""


class FramefeatError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(FramefeatError):
    """Invalid option or argument."""


class DataError(FramefeatError):
    """Undecodable or invalid input data."""


class FormatError(DataError):
    """Input violates an expected layout (channel count, frame naming)."""


class IoError(FramefeatError):
    """A file could not be read or written."""


class EnvError(FramefeatError):
    """A required external resource (pretrained weights) is unavailable."""
