from dataclasses import replace

import pytest

from deepind.library.core.declarations import Classification
from deepind.library.core.environment import Environment
from deepind.library.syntax import parse_module
from deepind.tests.utilities.corpus import load_corpus_environment


def test_from_module():

    environment = load_corpus_environment("rose")

    assert [declaration.name for declaration in environment] == [
        "Equal",
        "List",
        "Rose",
    ]
    assert environment.module_names == ["Rose"]
    assert [item.name for item in environment.module_declarations] == ["Rose"]

    assert all(declaration.classification is not None for declaration in environment)


def test_from_module_shadowed():

    environment = load_corpus_environment("list")

    assert [declaration.name for declaration in environment] == ["Equal", "List"]
    assert environment.module_names == ["List"]


def test_from_module_dependency_order():

    environment = Environment.from_module(
        parse_module(
            "data T : Set -> Set where\n"
            "  t : forall {A : Set} . U A -> T A\n"
            "\n"
            "data U : Set -> Set where\n"
            "  u : forall {A : Set} . A -> U A\n"
        )
    )

    assert environment.module_names == ["U", "T"]


def test_lookup():

    environment = load_corpus_environment("seq")

    assert "Seq" in environment
    assert "Bool" in environment
    assert "Foo" not in environment

    assert environment.arity("Seq") == 1
    assert environment.arity("Equal") == 2
    assert environment.arity("Bool") == 0

    assert environment.classification("Seq") == Classification.GADT
    assert environment.classification("Bool") is None

    assert environment.get("Foo") is None

    with pytest.raises(KeyError):
        _ = environment["Foo"]


def test_with_declaration():

    environment = load_corpus_environment("seq")

    seq = environment["Seq"]
    replaced = environment.with_declaration(
        replace(seq, constructors=seq.constructors[:1], classification=None)
    )

    assert len(replaced["Seq"].constructors) == 1
    assert replaced["Seq"].classification == Classification.ADT
    assert len(environment["Seq"].constructors) == 2

    assert replaced.module_names == environment.module_names
