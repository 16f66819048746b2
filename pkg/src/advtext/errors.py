"""Exception types shared across the package."""


class AdvTextError(Exception):
    """Base class for all advtext-specific errors."""


class EmptyInput(AdvTextError):
    """Raised when a text is empty or whitespace-only."""


class ConflictingSwaps(AdvTextError):
    """Raised when two swaps target the same token index."""


class LengthMismatch(AdvTextError):
    """Raised when two texts that must be token-aligned differ in length."""


class FormatError(AdvTextError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateVector(AdvTextError):
    """Raised when a zero vector is used where a direction is required."""


class DomainError(AdvTextError):
    """Raised when a numeric argument is outside its mathematical domain."""


class DegenerateDataset(AdvTextError):
    """Raised when a training set is empty or contains a single class."""


class ConfigError(AdvTextError):
    """Invalid configuration: unknown keys, bad ids, missing files."""


class InstanceTooLarge(AdvTextError):
    """Raised when an exhaustive enumeration would exceed its cap."""


class BudgetExhausted(AdvTextError):
    """Raised by a query counter when the model-query budget runs out."""
