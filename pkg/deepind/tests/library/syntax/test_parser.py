import pytest

from deepind.library.core.declarations import Binder
from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.syntax import load_prelude, parse_module
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.corpus import load_corpus_module

A, B, C = TVar("A"), TVar("B"), TVar("C")


@pytest.mark.parametrize(
    "file_name, expected_names",
    [
        ("empty", []),
        ("equal", ["Equal"]),
        ("seq", ["Seq"]),
        ("lterm", ["LType", "LTerm"]),
        ("rose", ["Rose"]),
        ("bush", ["Bush"]),
        ("nested_gadt", ["Nest"]),
    ],
)
def test_parse_corpus(file_name, expected_names):

    module = load_corpus_module(file_name)
    assert [declaration.name for declaration in module.declarations] == (
        expected_names
    )


def test_parse_seq():

    seq = load_corpus_module("seq").declaration("Seq")

    assert seq.arity == 1
    assert [constructor.name for constructor in seq.constructors] == [
        "const",
        "pair",
    ]

    pair = seq.constructor("pair")

    assert pair.binders == (Binder("A", True), Binder("B"), Binder("C"))
    assert pair.domain == (
        TData("Equal", (A, TProduct(B, C))),
        TData("Seq", (B,)),
        TData("Seq", (C,)),
    )
    assert pair.indices == (A,)

    assert pair.constraints == [("A", TProduct(B, C))]
    assert pair.index_binders == ["B", "C"]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A -> B -> C", TArrow(A, TArrow(B, C))),
        ("(A -> B) -> C", TArrow(TArrow(A, B), C)),
        ("A * B + C", TSum(TProduct(A, B), C)),
        ("A * (B + C)", TProduct(A, TSum(B, C))),
        ("A * B * C", TProduct(A, TProduct(B, C))),
        ("List (A * B) -> Unit", TArrow(TData("List", (TProduct(A, B),)), TUnit())),
        ("Bool + String", TSum(TData("Bool"), TData("String"))),
    ],
)
def test_parse_precedence(text, expected):

    module = parse_module(
        f"data T : Set -> Set where\n  t : forall {{A B C : Set}} . ({text}) -> T A"
    )

    assert module.declaration("T").constructors[0].domain == (expected,)


def test_parse_spans():

    text = "-- A comment.\ndata U : Set where\n  u : U\n"
    declaration = parse_module(text).declaration("U")

    encoded = text.encode("utf-8")

    assert encoded[declaration.span[0] : declaration.span[1]].startswith(b"data U")
    constructor = declaration.constructors[0]
    assert encoded[constructor.span[0] : constructor.span[1]] == b"u : U"


def test_parse_spans_skip_comments():

    text = (
        "data T : Set -> Set where\n"
        "  -- the first constructor\n"
        "  c : forall {A : Set} . A -> T A -- trailing\n"
        "\n"
        "  d : forall {A : Set} . T A\n"
        "\n"
    )

    declaration = parse_module(text).declaration("T")
    encoded = text.encode("utf-8")

    assert [
        encoded[constructor.span[0] : constructor.span[1]]
        for constructor in declaration.constructors
    ] == [b"c : forall {A : Set} . A -> T A", b"d : forall {A : Set} . T A"]

    assert encoded[declaration.span[0] : declaration.span[1]].endswith(b". T A")


def test_parse_forward_reference():

    module = parse_module(
        "data T : Set -> Set where\n"
        "  t : forall {A : Set} . U A -> T A\n"
        "\n"
        "data U : Set -> Set where\n"
        "  u : forall {A : Set} . A -> U A\n"
    )

    assert [item.name for item in module.ordered_declarations()] == ["U", "T"]


def test_parse_shadowed_prelude():

    module = load_corpus_module("list")

    assert module.declaration("List") == next(
        item for item in load_prelude() if item.name == "List"
    )


def test_parse_without_prelude():

    with pytest.raises(DiagnosticError) as error_info:

        parse_module(
            "data T : Set -> Set where\n  t : forall {A : Set} . List A -> T A",
            prelude=False,
        )

    assert error_info.value.codes == [DiagnosticCode.UNRESOLVED_NAME]


@pytest.mark.parametrize(
    "text, expected_code",
    [
        ("data T : Set -> Set wher", DiagnosticCode.SYNTAX_ERROR),
        (
            "data T : Set -> Set where\n  t : forall {A : Set} . Foo A -> T A",
            DiagnosticCode.UNRESOLVED_NAME,
        ),
        (
            "data T : Set -> Set where\n  t : forall {A : Set} . List A A -> T A",
            DiagnosticCode.ARITY_MISMATCH,
        ),
        (
            "data T : Set -> Set where\n  t : forall {A : Set} . A -> T A A",
            DiagnosticCode.ARITY_MISMATCH,
        ),
        (
            "data T : Set -> Set where\n  t : forall {A : Set} . A B -> T A",
            DiagnosticCode.ARITY_MISMATCH,
        ),
        (
            "data T : Set -> Set where\n  t : forall {A : Set} . A -> List A",
            DiagnosticCode.RETURN_TYPE_MISMATCH,
        ),
        (
            "data T : Set -> Set where\n"
            "  t : forall {A : Set} . T A\n"
            "  t : forall {A : Set} . T A",
            DiagnosticCode.DUPLICATE_DECLARATION,
        ),
        (
            "data T : Set -> Set where\n"
            "  t : forall {A A : Set} . T A",
            DiagnosticCode.DUPLICATE_DECLARATION,
        ),
        (
            "data T : Set where\n  t : T\n\ndata T : Set where\n  s : T",
            DiagnosticCode.DUPLICATE_DECLARATION,
        ),
    ],
)
def test_parse_errors(text, expected_code):

    with pytest.raises(DiagnosticError) as error_info:
        parse_module(text)

    assert expected_code in error_info.value.codes
    assert all(
        diagnostic.span is not None for diagnostic in error_info.value.diagnostics
    )


def test_parse_unresolved_message():

    with pytest.raises(DiagnosticError) as error_info:
        parse_module("data T : Set -> Set where\n  t : forall {A : Set} . Foo -> T A")

    diagnostic = error_info.value.diagnostics[0]

    assert diagnostic.message == "unresolved name Foo"
    assert diagnostic.declaration == "T"


def test_parse_mutual_recursion():

    with pytest.raises(DiagnosticError) as error_info:

        parse_module(
            "data T : Set -> Set where\n"
            "  t : forall {A : Set} . U A -> T A\n"
            "\n"
            "data U : Set -> Set where\n"
            "  u : forall {A : Set} . T A -> U A\n"
        )

    assert error_info.value.codes == [
        DiagnosticCode.MUTUAL_RECURSION,
        DiagnosticCode.MUTUAL_RECURSION,
    ]
    assert {
        diagnostic.declaration for diagnostic in error_info.value.diagnostics
    } == {"T", "U"}
