"""Exception types shared across the package."""


class SentlenError(Exception):
    """Base class for errors raised by this package."""


class DataError(SentlenError):
    """Bad input data: corpus, labels, config files, or model files."""


class ModelFormatError(DataError):
    """A model file that cannot be read or fails validation."""


class TrainingError(SentlenError):
    """Optimisation failed: bad shapes, non-finite values, or divergence."""
