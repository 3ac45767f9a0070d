"""Rich words: palindromic richness, UPS-factorization, counting, and bounds."""

from .eertree import AppendOutcome, Eertree
from .enumerate import Budget, CountTable, EnumerationStats, count_rich, enumerate_rich, max_ups_parts
from .errors import (
    AlphabetError,
    BudgetExceededError,
    DomainError,
    EmptyWordError,
    InputTooLargeError,
    InsufficientDataError,
    InvalidHypothesisError,
    NotRichError,
    RichlangError,
    UndoUnderflowError,
    WordParseError,
)
from .rich import UPSFactorization, defect, is_rich, ups_factorize, ups_part_count
from .words import Alphabet, Word, is_palindrome, reverse

__version__ = "0.1.0"
