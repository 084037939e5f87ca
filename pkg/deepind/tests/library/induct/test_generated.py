"""Derives every artifact for randomly generated single-constructor-family
declarations and checks that the results are well formed."""
from hypothesis import HealthCheck, given, note, settings
from hypothesis import strategies as st

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.declarations import Binder, ConstructorDecl, DataDecl
from deepind.library.core.environment import Environment
from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar
from deepind.library.induct import (
    check_coverage,
    check_descent,
    check_scope,
    derive_deep_rule,
    derive_structural_rule,
    simplify_structural,
    synth_witness,
)
from deepind.library.lift import check_declaration, derive_data_lifting
from deepind.library.syntax import load_prelude
from deepind.library.syntax.printer import print_declaration

BINDERS = (Binder("A", True), Binder("B"), Binder("C"))

variables = st.sampled_from([TVar(binder.name) for binder in BINDERS])


def _self(argument):
    return TData("T", (argument,))


indices = st.sampled_from(
    [
        TVar("A"),
        TProduct(TVar("B"), TVar("C")),
        TData("List", (TVar("B"),)),
        TData("Bool"),
    ]
)

arguments = st.one_of(
    variables,
    st.just(TUnit()),
    st.just(TData("Bool")),
    variables.map(_self),
    variables.map(lambda x: TData("List", (_self(x),))),
    st.tuples(variables, variables).map(lambda xy: TProduct(xy[0], _self(xy[1]))),
    variables.map(lambda x: TArrow(TData("Bool"), _self(x))),
    variables.map(lambda x: TSum(_self(x), TUnit())),
)


@st.composite
def declarations(draw) -> DataDecl:

    constructor_count = draw(st.integers(min_value=1, max_value=3))

    constructors = tuple(
        ConstructorDecl(
            f"c{index}",
            BINDERS,
            tuple(draw(st.lists(arguments, max_size=3))),
            (draw(indices),),
        )
        for index in range(constructor_count)
    )

    return DataDecl("T", 1, constructors)


@given(declaration=declarations())
@settings(max_examples=50, deadline=None, suppress_health_check=list(HealthCheck))
def test_generated_declarations(declaration):

    environment = Environment([*load_prelude(), declaration], ["T"])
    declaration = environment["T"]

    note(print_declaration(declaration))

    assert check_declaration(declaration, environment) == []

    lifting = derive_data_lifting(declaration, environment)

    assert check_coverage(lifting, declaration) == []
    assert check_scope(lifting) == []

    witness = synth_witness(declaration, environment)

    assert check_coverage(witness, declaration) == []
    assert check_scope(witness) == []
    assert check_descent(witness) == []

    deep_rule = derive_deep_rule(declaration, environment)
    structural_rule = derive_structural_rule(declaration, environment)

    assert check_scope(deep_rule) == []

    assert alpha_eq(
        simplify_structural(deep_rule).statement,
        structural_rule.expanded().statement,
    )
