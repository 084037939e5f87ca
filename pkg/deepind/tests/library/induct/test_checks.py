import pytest

from deepind.library.core.terms import (
    Clause,
    FunctionDef,
    PCon,
    Postulate,
    PVar,
    SelfCall,
    SetSort,
    TopT,
    Tt,
)
from deepind.library.induct import check_coverage, check_descent, check_scope
from deepind.library.lift import derive_data_lifting
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.tests.utilities.corpus import (
    CORPUS_DECLARATIONS,
    load_corpus_declaration,
)
from deepind.tests.utilities.terms import v


@pytest.mark.parametrize("file_name, name", CORPUS_DECLARATIONS)
def test_lifting_checks(file_name, name):

    declaration, environment = load_corpus_declaration(file_name, name)
    lifting = derive_data_lifting(declaration, environment)

    assert check_coverage(lifting, declaration) == []
    assert check_scope(lifting) == []


def test_check_coverage_missing(seq_environment):

    lifting = derive_data_lifting(seq_environment["Seq"], seq_environment)
    partial = FunctionDef(lifting.name, lifting.signature, lifting.clauses[:1])

    diagnostics = check_coverage(partial, seq_environment["Seq"])

    assert [diagnostic.code for diagnostic in diagnostics] == [
        DiagnosticCode.COVERAGE_VIOLATION
    ]
    assert "pair" in diagnostics[0].message


def test_check_coverage_duplicate(seq_environment):

    lifting = derive_data_lifting(seq_environment["Seq"], seq_environment)
    duplicated = FunctionDef(
        lifting.name, lifting.signature, (*lifting.clauses, lifting.clauses[0])
    )

    diagnostics = check_coverage(duplicated, seq_environment["Seq"])

    assert [diagnostic.code for diagnostic in diagnostics] == [
        DiagnosticCode.COVERAGE_VIOLATION
    ]
    assert "const" in diagnostics[0].message


def test_check_scope():

    definition = FunctionDef(
        "f",
        SetSort(),
        (Clause((PVar("x"),), v("y")),),
    )

    diagnostics = check_scope(definition)

    assert [diagnostic.code for diagnostic in diagnostics] == [
        DiagnosticCode.SCOPE_VIOLATION
    ]
    assert diagnostics[0].message.endswith("y")

    assert check_scope(Postulate("lemma", v("A"))) != []
    assert check_scope(Postulate("lemma", TopT())) == []


@pytest.mark.parametrize(
    "body, expected_violations",
    [
        # A recursive call on a strict subterm of the pattern.
        (SelfCall("f", (), v("s"), v("e")), 0),
        # A recursive call on the scrutinee itself.
        (SelfCall("f", (), v("x"), v("e")), 1),
        # A partially applied call outside of a map.
        (SelfCall("f", ()), 1),
        (Tt(), 0),
    ],
)
def test_check_descent(body, expected_violations):

    definition = FunctionDef(
        "f",
        SetSort(),
        (Clause((PVar("x"), PCon("wrap", (PVar("s"),)), PVar("e")), body),),
    )

    diagnostics = check_descent(definition)

    assert len(diagnostics) == expected_violations
    assert all(
        diagnostic.code == DiagnosticCode.DESCENT_VIOLATION
        for diagnostic in diagnostics
    )
