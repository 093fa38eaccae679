"""Exception types shared across the package."""


class RssteError(Exception):
    """Base class for all package-specific errors."""


class UnknownCharacter(RssteError):
    """A character in the input text is not part of the alphabet."""


class TextTooLong(RssteError):
    """Text has more characters than the fixed label length allows."""


class MalformedLabel(RssteError):
    """An index sequence violates the padding-suffix rule or index range."""


class EmptyPool(RssteError):
    """A style pool has no fonts or no backgrounds to sample from."""


class TextDoesNotFit(RssteError):
    """Rendered glyphs would fall outside the canvas under the given style."""


class PoolOverlap(RssteError):
    """The shifted style pool shares fonts with the training pool."""


class ShapeMismatch(RssteError):
    """An array does not have the shape an operation requires."""


class Divergence(RssteError):
    """Training loss became non-finite."""


class CorruptCheckpoint(RssteError):
    """A checkpoint file failed structural or integrity validation."""


class ConfigMismatch(RssteError):
    """Checkpoint metadata disagrees with the configuration in use."""


class EmptyCorpus(RssteError):
    """No corpus word satisfies the sampling constraints."""


class EmptySet(RssteError):
    """A set-level metric received an empty image set."""


class LengthMismatch(RssteError):
    """Two sequences that must align have different lengths."""


class ConfigError(RssteError):
    """A run configuration failed validation."""
