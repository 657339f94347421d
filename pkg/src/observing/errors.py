"""Exception hierarchy shared by all modules."""


class ObservingError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(ObservingError, ValueError):
    """A symbol was used outside the alphabet it must belong to."""


class GrammarError(ObservingError, ValueError):
    """A grammar violates one of its construction invariants."""


class PatternError(ObservingError, ValueError):
    """A case pattern could not be parsed or references unknown symbols."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at column {position})"
        super().__init__(message)
        self.position = position


class StickerError(ObservingError, ValueError):
    """A sticker-system value violates its invariants."""


class ReplayError(ObservingError, ValueError):
    """A replay script failed to apply at some step."""

    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class BoundsError(ObservingError, ValueError):
    """Enumeration bounds are out of range."""


class FormatError(ObservingError, ValueError):
    """A system file is malformed. Always carries a line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
