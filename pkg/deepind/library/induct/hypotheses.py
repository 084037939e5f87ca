"""Induction hypotheses, one per constructor, of deep and structural
induction rules."""
import logging
from typing import Dict, List

from deepind.library.core.declarations import EQUAL, DataDecl, index_names
from deepind.library.core.naming import (
    NameSupply,
    hypothesis_name,
    predicate_name,
    structural_hypothesis_name,
    witness_name,
)
from deepind.library.core.terms import (
    Arr,
    Hypothesis,
    KTop,
    Lam,
    SetSort,
    Term,
    Var,
    apply,
    arrows,
    data_type,
    free_variables,
    telescope,
    type_to_term,
)
from deepind.library.core.types import TData, TVar
from deepind.library.core.views import ConstructorView
from deepind.library.encode import encode_constructor, henry_ford
from deepind.library.induct.equal import (
    equal_hypothesis,
    equal_structural_hypothesis,
)
from deepind.library.lift.liftings import (
    argument_premises,
    constraint_premises,
    declaration_views,
    lifting_signature,
)
from deepind.library.lift.obstruction import ensure_derivable
from deepind.library.lift.shapes import lifting_premise, unindexed

logger = logging.getLogger(__name__)


def rule_predicate_name(declaration: DataDecl) -> str:
    """The name of the predicate ``P`` proved by the rules of a declaration,
    distinct from every name bound by its constructors."""

    supply = NameSupply(
        name
        for constructor in declaration.constructors
        for binder in encode_constructor(constructor).binder_names
        for name in (binder, predicate_name(binder))
    )

    return supply.fresh("P")


def deep_predicate_type(declaration: DataDecl) -> Term:
    """``forall (A : Set) -> (A -> Set) -> G A -> Set``"""
    return lifting_signature(declaration.name, declaration.arity)


def structural_predicate_type(declaration: DataDecl) -> Term:
    """``forall (A : Set) -> G A -> Set``"""

    indices = index_names(declaration.arity)

    return telescope(
        [(index, SetSort()) for index in indices],
        Arr(data_type(declaration.name, *map(Var, indices)), SetSort()),
    )


def hypothesis_names(declaration: DataDecl, structural: bool = False) -> List[str]:
    """The names of the hypotheses of a declaration's rule, kept distinct from
    the name of its witness."""

    supply = NameSupply([witness_name(declaration.name)])
    namer = structural_hypothesis_name if structural else hypothesis_name

    return [
        supply.fresh(namer(constructor.name))
        for constructor in declaration.constructors
    ]


def kt_predicates(view: ConstructorView) -> Dict[str, Term]:
    """Maps every binder of a constructor to the constantly true predicate."""
    return {
        name: KTop(Var(name))
        for name in (*view.return_variables, *view.index_binders)
    }


def _binders(view: ConstructorView, predicates: bool):

    binders = [
        (name, SetSort()) for name in (*view.return_variables, *view.index_binders)
    ]

    if predicates:

        binders.extend(
            (predicate_name(name), Arr(Var(name), SetSort()))
            for name in (*view.return_variables, *view.index_binders)
        )

    binders.extend(
        (proof, type_to_term(TData(EQUAL, (TVar(variable), index))))
        for (variable, index), proof in zip(view.constraints, view.constraint_names)
    )
    binders.extend(
        (argument.name, type_to_term(argument.type)) for argument in view.arguments
    )

    return binders


def deep_hypothesis_body(view: ConstructorView, predicate: str) -> Term:
    """``forall A B Q_A Q_B (e : Equal A K) (x : F) -> Equal^ ... -> F^ P x ->
    P A Q_A (c B e x)``"""

    premises = [
        *constraint_premises(view),
        *argument_premises(view, Var(predicate)),
    ]

    conclusion = apply(
        Var(predicate),
        *(Var(name) for name in view.return_variables),
        *view.return_predicates,
        view.term(),
    )

    return telescope(_binders(view, True), arrows(premises, conclusion))


def structural_hypothesis_body(view: ConstructorView, predicate: str) -> Term:
    """``forall A B (e : Equal A K) (x : F) -> F^ P x -> P A (c B e x)`` where
    only the premises mentioning ``P`` are retained."""

    predicates = kt_predicates(view)
    premises = []

    for argument in view.arguments:

        premise = lifting_premise(
            argument.shape,
            Var(argument.name),
            unindexed(Var(predicate)),
            predicates,
            view.supply,
        )

        if premise is not None and predicate in free_variables(premise):
            premises.append(premise)

    conclusion = apply(
        Var(predicate),
        *(Var(name) for name in view.return_variables),
        view.term(),
    )

    return telescope(_binders(view, False), arrows(premises, conclusion))


def constructor_views(
    declaration: DataDecl, environment, predicate: str, reserved=()
) -> List[ConstructorView]:
    """The views of the encoded constructors of a declaration, naming their
    variables apart from the rule predicate and the witness."""

    ensure_derivable(declaration)

    return declaration_views(
        henry_ford(declaration),
        environment,
        [predicate, witness_name(declaration.name), *reserved],
    )


def derive_hypotheses(declaration: DataDecl, environment) -> List[Hypothesis]:
    """Derives the deep induction hypothesis ``dInd{C}`` of each constructor
    ``C``, a function of the rule predicate ``P``.

    Recursive positions are lifted at ``P`` itself, so that the premise of an
    argument ``x : G B`` reads ``P B Q_B x`` and that of a truly nested argument
    ``x : G (G B)`` reads ``P (G B) (P B Q_B) x``.

    Raises
    ------
    DiagnosticError
        With a NULLARY_DECLARATION or TRULY_NESTED_GADT diagnostic.
    """

    predicate = rule_predicate_name(declaration)
    predicate_type = deep_predicate_type(declaration)

    if declaration.is_equal:
        return [equal_hypothesis(predicate, predicate_type)]

    logger.debug(f"deriving the deep induction hypotheses of {declaration.name}")

    return [
        Hypothesis(
            name, Lam(predicate, deep_hypothesis_body(view, predicate), predicate_type)
        )
        for name, view in zip(
            hypothesis_names(declaration),
            constructor_views(declaration, environment, predicate),
        )
    ]


def derive_structural_hypotheses(
    declaration: DataDecl, environment
) -> List[Hypothesis]:
    """Derives the structural induction hypothesis ``sInd{C}`` of each
    constructor ``C``."""

    predicate = rule_predicate_name(declaration)
    predicate_type = structural_predicate_type(declaration)

    if declaration.is_equal:
        return [equal_structural_hypothesis(predicate, predicate_type)]

    return [
        Hypothesis(
            name,
            Lam(predicate, structural_hypothesis_body(view, predicate), predicate_type),
        )
        for name, view in zip(
            hypothesis_names(declaration, structural=True),
            constructor_views(declaration, environment, predicate),
        )
    ]
