"""
Error hierarchy shared by every radixfft app.

Library code raises these; management commands map them to exit codes.
"""


class RadixFFTError(Exception):
    """Root of all radixfft errors."""


class DomainError(RadixFFTError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigError(RadixFFTError, ValueError):
    """A configuration (factorization, accelerator setup) is inconsistent."""


class UnsupportedConfigError(ConfigError):
    """A configuration is valid in principle but not modelled here."""


class ResourceError(RadixFFTError):
    """An operation would exceed a configured size cap."""


class VectorFormatError(DomainError):
    """A complex-vector document is malformed."""

    def __init__(self, message: str, line_number: int = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class FileAccessError(RadixFFTError):
    """A vector or trace file cannot be opened, decoded or written."""
