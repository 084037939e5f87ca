import pytest
from pydantic import ValidationError

from deepind.library.models import Diagnostic, DiagnosticCode, Span, make_diagnostic
from deepind.library.models.diagnostics import byte_offset, line_and_column
from deepind.tests.utilities.utilities import does_not_raise


@pytest.mark.parametrize(
    "start, end, expected_raises",
    [
        (1, 1, does_not_raise()),
        (1, 4, does_not_raise()),
        (2, 1, pytest.raises(ValidationError)),
        (-1, 1, pytest.raises(ValidationError)),
    ],
)
def test_span_validation(start, end, expected_raises):

    with expected_raises:
        Span(start=start, end=end)


def test_diagnostic_empty_message():

    with pytest.raises(ValidationError):
        Diagnostic(code=DiagnosticCode.SYNTAX_ERROR, message="")


def test_diagnostic_immutable():

    diagnostic = make_diagnostic(DiagnosticCode.SYNTAX_ERROR, "oops")

    with pytest.raises(TypeError):
        diagnostic.message = "other"


def test_render_without_span():

    diagnostic = make_diagnostic(
        DiagnosticCode.NESTED_G, "message", explanation="first\nsecond"
    )

    assert diagnostic.render() == "\n".join(
        ["<input>: error[NESTED_G]: message", "  first", "  second"]
    )


def test_render_with_span():

    source = "data T : Set -> Set where\n  c : T A\n"
    diagnostic = make_diagnostic(
        DiagnosticCode.UNRESOLVED_NAME, "unresolved name A", span=(34, 35)
    )

    assert diagnostic.render(source, "t.gdt") == (
        "t.gdt:2:9: error[UNRESOLVED_NAME]: unresolved name A"
    )
    # Without the source text only the file name is known.
    assert diagnostic.render(file_name="t.gdt").startswith("t.gdt: ")


def test_render_color():

    diagnostic = make_diagnostic(DiagnosticCode.NESTED_G, "message")
    assert "\x1b[" in diagnostic.render(color=True)


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("abc", 0, (1, 1)),
        ("abc", 2, (1, 3)),
        ("a\nbc", 3, (2, 2)),
        ("∀a", 3, (1, 2)),
    ],
)
def test_line_and_column(text, offset, expected):
    assert line_and_column(text, offset) == expected


def test_byte_offset():

    assert byte_offset("abc", 2) == 2
    assert byte_offset("∀a", 1) == 3
