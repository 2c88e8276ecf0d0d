"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented structural rule."""


class CorruptTraceError(ValueError):
    """A move trace is internally inconsistent and cannot be decoded."""


class IllegalMoveError(RuntimeError):
    """A sorting-machine strategy proposed a move the machine cannot make."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step


class SearchLimitError(RuntimeError):
    """An exhaustive search was asked to exceed its configured budget."""


class ConfigurationError(ValueError):
    """An experiment specification is unusable as given."""
