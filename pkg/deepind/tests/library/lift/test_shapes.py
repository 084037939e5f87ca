import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.shapes import shape_of
from deepind.library.core.terms import apply, type_to_term
from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar
from deepind.library.lift import derive_shape_lifting, lift_type
from deepind.tests.utilities.corpus import load_corpus_environment
from deepind.tests.utilities.terms import data, lifted, v

ROSE_A = TData("Rose", (TVar("A"),))

PREDICATES = {"A": v("Q_A"), "B": v("Q_B"), "C": v("Q_C")}


@pytest.fixture(scope="module")
def rose_environment():
    return load_corpus_environment("rose")


@pytest.mark.parametrize(
    "argument, expected",
    [
        (TVar("A"), v("Q_A")),
        (ROSE_A, apply(v("P"), v("A"), v("Q_A"))),
        (
            TData("List", (ROSE_A,)),
            lifted("List", data("Rose", v("A")), apply(v("P"), v("A"), v("Q_A"))),
        ),
        (
            TProduct(TVar("B"), ROSE_A),
            lifted(
                "Pair",
                v("B"),
                data("Rose", v("A")),
                v("Q_B"),
                apply(v("P"), v("A"), v("Q_A")),
            ),
        ),
        (
            TSum(ROSE_A, TUnit()),
            lifted(
                "Sum",
                data("Rose", v("A")),
                type_to_term(TUnit()),
                apply(v("P"), v("A"), v("Q_A")),
                lift_type(TUnit(), PREDICATES),
            ),
        ),
        (
            TArrow(TData("Bool"), ROSE_A),
            lifted(
                "Arr",
                type_to_term(TData("Bool")),
                data("Rose", v("A")),
                lift_type(TData("Bool"), PREDICATES),
                apply(v("P"), v("A"), v("Q_A")),
            ),
        ),
    ],
)
def test_derive_shape_lifting(rose_environment, argument, expected):

    shape = shape_of(argument, "Rose", rose_environment)
    lifting = derive_shape_lifting(shape, v("P"), PREDICATES)

    assert alpha_eq(lifting, expected)


def test_lift_type():

    assert alpha_eq(
        lift_type(TProduct(TVar("B"), TVar("C")), PREDICATES),
        lifted("Pair", v("B"), v("C"), v("Q_B"), v("Q_C")),
    )
    assert alpha_eq(
        lift_type(TData("List", (TVar("B"),)), PREDICATES),
        lifted("List", v("B"), v("Q_B")),
    )
