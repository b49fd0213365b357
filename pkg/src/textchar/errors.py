"""Exception types shared across the package."""


class TextcharError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(TextcharError):
    """Invalid configuration, manifest, or run setup (CLI exit code 2)."""


class DataFormatError(TextcharError):
    """Malformed input data: datasets, outcome files, lexicon files."""
