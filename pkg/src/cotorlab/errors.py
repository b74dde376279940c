"""Exception types shared across the library."""


class InputError(ValueError):
    """A contract violation in operation inputs (shape/field/window mismatch)."""


class ValidationError(ValueError):
    """An object failed structural validation; carries the violation report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = list(report or [])
