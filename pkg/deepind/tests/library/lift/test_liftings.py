import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.environment import Environment
from deepind.library.core.terms import (
    Arr,
    Clause,
    LiftingDef,
    PCon,
    Pi,
    Prod,
    PVar,
    SetSort,
    Sig,
    apply,
)
from deepind.library.lift import LiftingRegistry, derive_data_lifting
from deepind.library.lift.liftings import lifting_signature, referenced_liftings
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.syntax import parse_module
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.corpus import (
    CORPUS_DECLARATIONS,
    load_corpus_declaration,
)
from deepind.tests.utilities.terms import data, lifted, predicate_type, v


def test_lifting_signature():

    expected = Pi(
        "A",
        SetSort(),
        Pi(
            "B",
            SetSort(),
            Arr(
                predicate_type("A"),
                Arr(
                    predicate_type("B"),
                    Arr(data("T", v("A"), v("B")), SetSort()),
                ),
            ),
        ),
    )

    assert alpha_eq(lifting_signature("T", 2), expected)


def test_seq_lifting(seq_environment):

    lifting = derive_data_lifting(seq_environment["Seq"], seq_environment)

    pair_pattern = PCon(
        "pair", (PVar("B"), PVar("C"), PVar("e"), PVar("s_B"), PVar("s_C"))
    )
    pair_body = Sig(
        "Q_B",
        predicate_type("B"),
        Sig(
            "Q_C",
            predicate_type("C"),
            Prod(
                lifted(
                    "Equal",
                    v("A"),
                    Prod(v("B"), v("C")),
                    v("Q_A"),
                    lifted("Pair", v("B"), v("C"), v("Q_B"), v("Q_C")),
                    v("e"),
                ),
                Prod(
                    lifted("Seq", v("B"), v("Q_B"), v("s_B")),
                    lifted("Seq", v("C"), v("Q_C"), v("s_C")),
                ),
            ),
        ),
    )

    expected = LiftingDef(
        "Seq^",
        lifting_signature("Seq", 1),
        (
            Clause(
                (PVar("A"), PVar("Q_A"), PCon("const", (PVar("a"),))),
                apply(v("Q_A"), v("a")),
            ),
            Clause((PVar("A"), PVar("Q_A"), pair_pattern), pair_body),
        ),
        "Seq",
    )

    assert lifting.name == "Seq^"
    assert lifting.declaration == "Seq"
    assert alpha_eq(lifting, expected)


def test_structured_seq_lifting():
    """A declaration and its Henry Ford encoding have the same lifting."""

    structured, structured_environment = load_corpus_declaration(
        "seq_structured", "Seq"
    )
    encoded, encoded_environment = load_corpus_declaration("seq", "Seq")

    assert alpha_eq(
        derive_data_lifting(structured, structured_environment),
        derive_data_lifting(encoded, encoded_environment),
    )


def test_rose_lifting_nests_list():

    declaration, environment = load_corpus_declaration("rose", "Rose")
    lifting = derive_data_lifting(declaration, environment)

    assert [clause.patterns[-1].constructor for clause in lifting.clauses] == [
        "empty",
        "node",
    ]

    # List^ (Rose A) (Rose^ A Q_A) l_A
    expected = Prod(
        apply(v("Q_A"), v("a")),
        lifted(
            "List",
            data("Rose", v("A")),
            lifted("Rose", v("A"), v("Q_A")),
            v("l_A"),
        ),
    )

    assert alpha_eq(lifting.clauses[1].body, expected)


@pytest.mark.parametrize("file_name, name", CORPUS_DECLARATIONS)
def test_derive_corpus_liftings(file_name, name):

    declaration, environment = load_corpus_declaration(file_name, name)
    lifting = derive_data_lifting(declaration, environment)

    assert lifting.name == f"{name}^"
    assert len(lifting.clauses) == len(declaration.constructors)


def test_lterm_referenced_liftings(lterm_environment):

    registry = LiftingRegistry(lterm_environment)

    assert referenced_liftings(registry.lifting("LTerm")) == [
        "LType",
        "Equal",
        "Arr",
        "LTerm",
        "List",
    ]
    assert "KTop" not in referenced_liftings(registry.lifting("LTerm"))


def test_registry(seq_environment):

    registry = LiftingRegistry(seq_environment)

    assert "Seq" in registry
    assert "Pair" in registry
    assert "Foo" not in registry

    assert registry.lifting("Seq") is registry.lifting("Seq")
    assert registry.lifting("Pair").name == "Pair^"


def test_derive_truly_nested_gadt():

    declaration, environment = load_corpus_declaration("nested_gadt", "Nest")

    with pytest.raises(DiagnosticError) as error_info:
        derive_data_lifting(declaration, environment)

    assert error_info.value.codes == [DiagnosticCode.TRULY_NESTED_GADT]


def test_derive_nullary():

    environment = Environment.from_module(parse_module("data U : Set where\n  u : U"))

    with pytest.raises(DiagnosticError) as error_info:
        derive_data_lifting(environment["U"], environment)

    assert error_info.value.codes == [DiagnosticCode.NULLARY_DECLARATION]
