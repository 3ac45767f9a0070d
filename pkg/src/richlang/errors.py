"""Exception hierarchy shared by all richlang modules."""

from __future__ import annotations


class RichlangError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(RichlangError, ValueError):
    """A letter or alphabet size is outside the permitted range."""


class WordParseError(AlphabetError):
    """Text could not be parsed as a word over the declared alphabet."""


class InputTooLargeError(RichlangError, ValueError):
    pass


class EmptyWordError(RichlangError, ValueError):
    pass


class UndoUnderflowError(RichlangError, IndexError):
    pass


class NotRichError(RichlangError, ValueError):
    """Raised when an operation requires a rich word."""

    def __init__(self, word: str, defect: int):
        super().__init__(f"word {word!r} is not rich (defect {defect})")
        self.word = word
        self.defect = defect


class DomainError(RichlangError, ValueError):
    """Arguments violate the hypothesis of an inequality or formula."""


class InsufficientDataError(RichlangError, ValueError):
    pass


class InvalidHypothesisError(RichlangError, ValueError):
    pass


class BudgetExceededError(RichlangError):
    """Enumeration stopped on a node or time cap.

    ``partial`` holds the counts for every length that was fully enumerated
    (``partial.n_max == last_completed``).
    """

    def __init__(self, message: str, partial, last_completed: int):
        super().__init__(message)
        self.partial = partial
        self.last_completed = last_completed
