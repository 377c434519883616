"""Shared exception types.

Exit-code mapping in the CLI: DomainError -> 1 (usage), ResourceLimitError -> 2,
VerificationError -> 3. Library callers just catch the types.
"""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ResourceLimitError(RuntimeError):
    """The request would exceed a configured resource cap (rows, bits, terms)."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class VerificationError(AssertionError):
    """A verification suite assertion failed; carries the first counterexample."""
