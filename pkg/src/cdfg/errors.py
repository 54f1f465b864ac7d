"""Exception hierarchy shared by all cdfg modules.

Every error raised by the library derives from :class:`CdfgError`, so
callers can catch one base class.  The CLI maps subclasses onto process
exit codes (see ``cdfg.cli``).
"""


class CdfgError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(CdfgError):
    """Invalid parameter, option, or configuration file content."""


class DataError(CdfgError):
    """Data violates an invariant (non-finite values, bad labels, ...)."""


class FormatError(DataError):
    """A file does not conform to its declared on-disk format."""


class IoError(CdfgError):
    """Reading or writing a file failed at the OS level."""


class ShapeError(CdfgError):
    """Array dimensions are incompatible with the requested operation."""


class DegenerateError(CdfgError):
    """Input is degenerate (zero variance, all-identical rows, ...)."""


class NumericalError(CdfgError):
    """A numerical routine failed to converge or broke down."""
