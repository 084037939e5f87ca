from typing import TYPE_CHECKING, List

if TYPE_CHECKING:
    from deepind.library.models.diagnostics import Diagnostic


class DeepIndException(Exception):
    """The base exception for all of the custom exceptions raised by
    this framework.
    """

    ...


class DiagnosticError(DeepIndException):
    """Raised when a module or declaration is rejected. The rejection
    reasons are stored as a list of ``Diagnostic`` objects.
    """

    def __init__(self, diagnostics: List["Diagnostic"]):

        self.diagnostics = list(diagnostics)

        messages = "; ".join(
            f"{diagnostic.code.value}: {diagnostic.message}"
            for diagnostic in self.diagnostics
        )

        super(DiagnosticError, self).__init__(messages)

    @property
    def codes(self):
        return [diagnostic.code for diagnostic in self.diagnostics]


class CapExceededError(DeepIndException):
    """Raised when a finite carrier grows beyond one of the configured caps."""

    def __init__(self, description: str, size: int, cap: int):

        self.description = description
        self.size = size
        self.cap = cap

        super(CapExceededError, self).__init__(
            f"The {description} would contain {size} elements which exceeds the "
            f"cap of {cap}."
        )

    def to_diagnostic(self) -> "Diagnostic":

        from deepind.library.models.diagnostics import Diagnostic, DiagnosticCode

        return Diagnostic(code=DiagnosticCode.CAP_EXCEEDED, message=str(self))


class UnrecognisedKwargsError(DeepIndException):
    def __init__(self, *kwarg_names):

        self.kwarg_names = kwarg_names

        joined_kwarg_names = ", ".join(kwarg_names)

        super(UnrecognisedKwargsError, self).__init__(
            f"The {joined_kwarg_names} kwargs are unrecognised by this function."
        )
