"""Exception types shared across the wordmap pipeline."""

from __future__ import annotations


class WordmapError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(WordmapError):
    """A byte stream does not follow the expected file format.

    `offset` is the byte position where the problem was detected, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class TruncationError(FormatError):
    """The stream ended before the declared content was complete."""

    def __init__(self, message: str, word_index: int, offset: int | None = None):
        super().__init__(message, offset)
        self.word_index = word_index


class DuplicateWordError(FormatError):
    """The same word appears more than once in a vector file."""

    def __init__(self, word: str, offset: int | None = None):
        super().__init__(f"duplicate word {word!r}", offset)
        self.word = word


class DegenerateVectorError(WordmapError):
    """A zero-norm vector was used where a direction is required."""


class MissingWordError(WordmapError):
    """A query names a word that is not in the model vocabulary."""

    def __init__(self, word: str):
        super().__init__(f"word not in model vocabulary: {word!r}")
        self.word = word


class ConfigError(WordmapError):
    """Invalid configuration or configuration/input mismatch."""


class DivergenceError(WordmapError):
    """The optimizer produced non-finite values."""

    def __init__(self, iteration: int):
        super().__init__(f"optimization diverged (non-finite values at iteration {iteration})")
        self.iteration = iteration


class MapValidationError(WordmapError):
    """A map document violates the schema.

    `path` points at the offending location, e.g. ``points[3].x``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class ConsistencyError(WordmapError):
    """Pipeline stages disagree (e.g. coordinates without a matching word)."""
