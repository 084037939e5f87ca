from enum import Enum
from typing import Optional, Tuple

import click
from pydantic import Field, root_validator

from deepind.library.models.models import BaseModelWithFile
from deepind.library.models.validators.string import NonEmptyStr


class DiagnosticCode(Enum):
    """The closed set of reasons for which a module, declaration or
    emitted term may be rejected."""

    SYNTAX_ERROR = "SYNTAX_ERROR"
    UNRESOLVED_NAME = "UNRESOLVED_NAME"
    ARITY_MISMATCH = "ARITY_MISMATCH"
    DUPLICATE_DECLARATION = "DUPLICATE_DECLARATION"
    RETURN_TYPE_MISMATCH = "RETURN_TYPE_MISMATCH"
    NULLARY_DECLARATION = "NULLARY_DECLARATION"
    MUTUAL_RECURSION = "MUTUAL_RECURSION"

    GRAMMAR_VIOLATION = "GRAMMAR_VIOLATION"
    NESTED_G = "NESTED_G"
    H_IS_GADT = "H_IS_GADT"

    TRULY_NESTED = "TRULY_NESTED"
    TRULY_NESTED_GADT = "TRULY_NESTED_GADT"
    TRULY_NESTED_TYPE = "TRULY_NESTED_TYPE"
    UNSUPPORTED_MAP = "UNSUPPORTED_MAP"
    UNKNOWN_BUILTIN = "UNKNOWN_BUILTIN"

    CAP_EXCEEDED = "CAP_EXCEEDED"

    COVERAGE_VIOLATION = "COVERAGE_VIOLATION"
    SCOPE_VIOLATION = "SCOPE_VIOLATION"
    DESCENT_VIOLATION = "DESCENT_VIOLATION"


class Span(BaseModelWithFile):
    """A half open range of byte offsets into a source text."""

    start: int = Field(..., description="The offset of the first byte.", ge=0)
    end: int = Field(..., description="The offset one past the last byte.", ge=0)

    @root_validator
    def _validate_order(cls, values):

        start, end = values.get("start"), values.get("end")

        if start is not None and end is not None:
            assert end >= start, "a span cannot end before it starts"

        return values


class Diagnostic(BaseModelWithFile):

    code: DiagnosticCode = Field(..., description="The reason for the rejection.")
    message: NonEmptyStr = Field(..., description="A one line summary.")

    span: Optional[Span] = Field(
        None, description="The location of the offending source text, if known."
    )
    explanation: str = Field(
        "", description="An optional, possibly multi-line, longer explanation."
    )
    declaration: Optional[str] = Field(
        None, description="The name of the declaration being processed, if any."
    )

    def render(
        self, source: Optional[str] = None, file_name: str = "<input>", color=False
    ) -> str:
        """Renders the diagnostic as ``FILE:LINE:COL: error[CODE]: message``
        followed by its indented explanation.
        """

        location = file_name

        if self.span is not None and source is not None:
            line, column = line_and_column(source, self.span.start)
            location = f"{file_name}:{line}:{column}"

        header = f"error[{self.code.value}]"

        if color:
            header = click.style(header, fg="red", bold=True)

        lines = [f"{location}: {header}: {self.message}"]
        lines.extend(f"  {line}" for line in self.explanation.splitlines())

        return "\n".join(lines)


def byte_offset(text: str, character_index: int) -> int:
    """Converts a character index into ``text`` to a UTF-8 byte offset."""
    return len(text[:character_index].encode("utf-8"))


def line_and_column(text: str, offset: int) -> Tuple[int, int]:
    """Converts a UTF-8 byte offset into a one based (line, column) pair."""

    prefix = text.encode("utf-8")[:offset].decode("utf-8", errors="ignore")

    line = prefix.count("\n") + 1
    column = len(prefix) - (prefix.rfind("\n") + 1) + 1

    return line, column


def make_diagnostic(
    code: DiagnosticCode,
    message: str,
    span: Optional[Tuple[int, int]] = None,
    explanation: str = "",
    declaration: Optional[str] = None,
) -> Diagnostic:
    """A convenience constructor accepting spans as ``(start, end)`` tuples."""

    return Diagnostic(
        code=code,
        message=message,
        span=None if span is None else Span(start=span[0], end=span[1]),
        explanation=explanation,
        declaration=declaration,
    )
