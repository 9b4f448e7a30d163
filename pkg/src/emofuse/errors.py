"""Exception types shared across the package."""


class EmofuseError(Exception):
    """Base class for all errors raised by this package."""


class LexiconParseError(EmofuseError):
    """A lexicon file violated its format contract.

    Carries the 1-based line number of the offending row when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScaleError(EmofuseError):
    """A VAD vector arrived on the wrong scale for the requested operation."""


class CorpusError(EmofuseError):
    """A claim/reply stream violated the corpus schema."""


class InsufficientDataError(EmofuseError):
    """Too few (or degenerate) observations for the requested statistic."""


class EmptyGroupError(EmofuseError):
    """An aggregate was requested over an empty group of claims."""


class ParseWarning(UserWarning):
    """Recoverable oddity in an input file (e.g. duplicate word, first kept)."""
