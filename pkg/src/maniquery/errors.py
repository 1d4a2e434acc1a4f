"""Exception types shared across the package."""

from __future__ import annotations


class ManiqueryError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ManiqueryError):
    """Invalid configuration: unknown key, bad value, or missing resource."""


class EmptyTopicError(ManiqueryError):
    """A topic contains no document sentences."""


class EmptyRankingError(ManiqueryError):
    """Summary extraction was asked to select from zero document sentences."""


class MissingWordNetFileError(ManiqueryError):
    """One of the required WordNet database files is absent."""


class WordNetParseError(ManiqueryError):
    """A WordNet database record could not be parsed.

    Carries the offending file, 1-based line number and the byte offset of
    the start of that line.
    """

    def __init__(self, path, line_no: int, byte_offset: int, message: str):
        super().__init__(f"{path}:{line_no} (byte offset {byte_offset}): {message}")
        self.path = str(path)
        self.line_no = line_no
        self.byte_offset = byte_offset


class UnknownSynsetError(ManiqueryError):
    """A synset id does not exist in the loaded database."""


class DisconnectedSynsetsError(ManiqueryError):
    """Two synsets have no connecting path, so no distance is defined."""


class DimensionMismatchError(ManiqueryError):
    """Vector or matrix operands do not agree in shape."""


class TooFewRowsError(ManiqueryError):
    """An operation needs more rows than the input provides."""


class NonConvergenceError(ManiqueryError):
    """An iterative solver exhausted its iteration budget."""


class InvalidAlphaError(ManiqueryError):
    """The graph-propagation weight must lie strictly inside (0, 1)."""
