"""Shared exception types."""


class InputError(ValueError):
    """Malformed input: bad vertex ids, void complexes, unparsable files."""


class ResourceBudgetError(RuntimeError):
    """A configured resource budget (S-pairs, search nodes, size caps) was hit."""

    def __init__(self, message, budget=None, used=None):
        super().__init__(message)
        self.budget = budget
        self.used = used


class NotHomologyBallError(ValueError):
    """An operation requiring a homology ball was given something else."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LsopNotFoundError(RuntimeError):
    """No linear system of parameters found within the retry budget.

    Signals either non-Cohen-Macaulay input or pathologically unlucky
    coefficient draws; the seed and retry count are recorded.
    """

    def __init__(self, message, seed=None, retries=None):
        super().__init__(message)
        self.seed = seed
        self.retries = retries


class GinDisagreementError(RuntimeError):
    """Two independent coordinate changes produced different initial ideals."""

    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second


class FixtureMissingError(FileNotFoundError):
    """A data fixture that is shipped separately from the code is absent."""
