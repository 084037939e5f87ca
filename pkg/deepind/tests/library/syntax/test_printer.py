import pytest

from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar
from deepind.library.syntax import parse_module, print_module, print_type
from deepind.tests.utilities.corpus import load_corpus_module

A, B, C = TVar("A"), TVar("B"), TVar("C")


@pytest.mark.parametrize(
    "type_expr, expected",
    [
        (TArrow(A, TArrow(B, C)), "A -> B -> C"),
        (TArrow(TArrow(A, B), C), "(A -> B) -> C"),
        (TProduct(A, TProduct(B, C)), "A * B * C"),
        (TProduct(TProduct(A, B), C), "(A * B) * C"),
        (TProduct(TSum(A, B), C), "(A + B) * C"),
        (TSum(TProduct(A, B), C), "A * B + C"),
        (TData("List", (TData("List", (A,)),)), "List (List A)"),
        (TData("Equal", (A, TProduct(B, C))), "Equal A (B * C)"),
        (TData("Bool"), "Bool"),
        (TUnit(), "Unit"),
    ],
)
def test_print_type(type_expr, expected):
    assert print_type(type_expr) == expected


@pytest.mark.parametrize(
    "file_name", ["empty", "equal", "seq", "seq_structured", "lterm", "rose", "bush"]
)
def test_print_round_trip(file_name):

    module = load_corpus_module(file_name)
    assert parse_module(print_module(module, normalize=False)) == module


def test_print_normalized():

    module = load_corpus_module("seq_structured")

    assert print_module(module) == (
        "data Seq : Set -> Set where\n"
        "  const : forall {A : Set} . A -> Seq A\n"
        "  pair : forall {A B : Set} . Seq A -> Seq B -> Seq (A * B)\n"
    )


def test_print_reserved_names():
    """Binders are never renamed to a type constructor in scope."""

    module = parse_module(
        "data A : Set where\n"
        "  a : A\n"
        "\n"
        "data T : Set -> Set where\n"
        "  t : forall {X : Set} . A -> X -> T X\n"
    )

    printed = print_module(module)

    assert "t : forall {B : Set} . A -> B -> T B" in printed
