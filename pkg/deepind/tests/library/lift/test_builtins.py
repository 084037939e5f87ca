import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.terms import (
    Arr,
    Clause,
    EqualT,
    PCon,
    Pi,
    Prod,
    PTuple,
    PVar,
    SetSort,
    TopT,
    apply,
)
from deepind.library.lift import builtin_lifting
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.terms import v


@pytest.mark.parametrize(
    "name, expected_name, expected_clauses",
    [
        ("Equal", "Equal^", 1),
        ("Pair", "Pair^", 1),
        ("Sum", "Sum^", 2),
        ("Arr", "Arr^", 1),
        ("Arrow", "Arr^", 1),
        ("Unit", "Unit^", 1),
        ("KTop", "KTop", 1),
    ],
)
def test_builtin_lifting(name, expected_name, expected_clauses):

    lifting = builtin_lifting(name)

    assert lifting.name == expected_name
    assert len(lifting.clauses) == expected_clauses


def test_equal_lifting():
    """Equal^ relates the two predicates pointwise."""

    lifting = builtin_lifting("Equal")

    expected = Clause(
        (PVar("A"), PVar("A"), PVar("Q"), PVar("Q'"), PCon("refl")),
        Pi("x", v("A"), EqualT(apply(v("Q"), v("x")), apply(v("Q'"), v("x")))),
    )

    assert alpha_eq(lifting.clauses[0].body, expected.body)
    assert lifting.clauses[0].patterns == expected.patterns


def test_pair_lifting():

    clause = builtin_lifting("Pair").clauses[0]

    assert clause.patterns[-1] == PTuple((PVar("a"), PVar("b")))
    assert alpha_eq(
        clause.body, Prod(apply(v("Q_A"), v("a")), apply(v("Q_B"), v("b")))
    )


def test_unit_lifting():

    lifting = builtin_lifting("Unit")

    assert alpha_eq(lifting.signature, Arr(TopT(), SetSort()))
    assert alpha_eq(lifting.clauses[0].body, TopT())


def test_unknown_builtin():

    with pytest.raises(DiagnosticError) as error_info:
        builtin_lifting("Seq")

    assert error_info.value.codes == [DiagnosticCode.UNKNOWN_BUILTIN]
