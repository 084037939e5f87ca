"""Deep and structural induction rules of data declarations."""
import logging
from typing import List

from deepind.library.core.declarations import Classification, DataDecl, index_names
from deepind.library.core.naming import (
    NameSupply,
    argument_base_name,
    predicate_name,
    structural_rule_name,
    witness_name,
)
from deepind.library.core.terms import (
    Arr,
    HypRef,
    Hypothesis,
    LiftRef,
    Pi,
    RuleDef,
    RuleKind,
    SetSort,
    Term,
    Var,
    apply,
    arrows,
    data_type,
    free_variables,
    substitute,
    telescope,
    type_to_term,
)
from deepind.library.core.types import TData, TVar
from deepind.library.core.views import ConstructorView
from deepind.library.induct.hypotheses import (
    constructor_views,
    deep_predicate_type,
    derive_hypotheses,
    derive_structural_hypotheses,
    kt_predicates,
    rule_predicate_name,
    structural_predicate_type,
)
from deepind.library.lift.liftings import constraint_premises
from deepind.library.lift.shapes import constant, lifting_premise

logger = logging.getLogger(__name__)


def _subject_name(declaration: DataDecl, reserved) -> str:

    indices = index_names(declaration.arity)
    base = argument_base_name(TData(declaration.name, tuple(map(TVar, indices))))

    return NameSupply(reserved).fresh(base)


def deep_conclusion(declaration: DataDecl, predicate: str) -> Term:
    """``forall (A : Set) (Q_A : A -> Set) (y : G A) -> G^ A Q_A y ->
    P A Q_A y``"""

    indices = index_names(declaration.arity)
    predicates = [predicate_name(index) for index in indices]

    subject = _subject_name(declaration, [predicate, *indices, *predicates])
    arguments = [*map(Var, indices), *map(Var, predicates), Var(subject)]

    return telescope(
        [
            *((index, SetSort()) for index in indices),
            *(
                (name, Arr(Var(index), SetSort()))
                for index, name in zip(indices, predicates)
            ),
            (subject, data_type(declaration.name, *map(Var, indices))),
        ],
        Arr(
            apply(LiftRef(declaration.name), *arguments),
            apply(Var(predicate), *arguments),
        ),
    )


def structural_conclusion(declaration: DataDecl, predicate: str) -> Term:
    """``forall (A : Set) (y : G A) -> P A y``"""

    indices = index_names(declaration.arity)
    subject = _subject_name(declaration, [predicate, *indices])

    return telescope(
        [
            *((index, SetSort()) for index in indices),
            (subject, data_type(declaration.name, *map(Var, indices))),
        ],
        apply(Var(predicate), *map(Var, indices), Var(subject)),
    )


def _rule_statement(
    predicate: str,
    predicate_type: Term,
    hypotheses: List[Hypothesis],
    conclusion: Term,
) -> Term:

    premises = [apply(HypRef(item.name), Var(predicate)) for item in hypotheses]

    return Pi(predicate, predicate_type, arrows(premises, conclusion))


def _is_monomorphic(declaration: DataDecl, monomorphic: bool) -> bool:

    if monomorphic and declaration.classification != Classification.ADT:

        logger.warning(
            f"{declaration.name} is not an ADT and so has no rule with its indices "
            f"fixed outside the predicate: the polymorphic rule is derived instead"
        )
        return False

    return monomorphic


def _fix_indices(view: ConstructorView, indices: List[str], body: Term) -> Term:
    """Renames the return variables of a constructor, and their predicates, to
    the indices quantified outside the rule predicate."""

    mapping = {}

    for variable, index in zip(view.return_variables, indices):

        mapping[variable] = Var(index)
        mapping[predicate_name(variable)] = Var(predicate_name(index))

    return substitute(body, mapping)


def _monomorphic_hypothesis(
    view: ConstructorView, predicate: str, indices: List[str], deep: bool
) -> Term:
    """``forall B Q_B x -> F^ P x -> P (c B x)`` where recursive positions are
    lifted at the unindexed predicate ``P``."""

    predicates = view.predicates if deep else kt_predicates(view)
    premises = constraint_premises(view) if deep else []

    for argument in view.arguments:

        premise = lifting_premise(
            argument.shape,
            Var(argument.name),
            constant(Var(predicate)),
            predicates,
            view.supply,
        )

        if premise is None or (not deep and predicate not in free_variables(premise)):
            continue

        premises.append(premise)

    binders = [(name, SetSort()) for name in view.index_binders]

    if deep:
        binders.extend(
            (predicate_name(name), Arr(Var(name), SetSort()))
            for name in view.index_binders
        )

    binders.extend(
        (argument.name, type_to_term(argument.type)) for argument in view.arguments
    )

    body = telescope(binders, arrows(premises, apply(Var(predicate), view.term())))

    return _fix_indices(view, indices, body)


def _monomorphic_rule(declaration: DataDecl, environment, deep: bool) -> RuleDef:
    """``forall (A : Set) (P : G A -> Set) (Q_A : A -> Set) -> hypotheses ->
    forall (y : G A) -> G^ A Q_A y -> P y`` with the hypotheses inlined."""

    predicate = rule_predicate_name(declaration)
    indices = index_names(declaration.arity)
    predicates = [predicate_name(index) for index in indices]

    carrier = data_type(declaration.name, *map(Var, indices))

    binders = [(index, SetSort()) for index in indices]
    binders.append((predicate, Arr(carrier, SetSort())))

    if deep:
        binders.extend(
            (name, Arr(Var(index), SetSort()))
            for index, name in zip(indices, predicates)
        )

    hypotheses = [
        _monomorphic_hypothesis(view, predicate, indices, deep)
        for view in constructor_views(declaration, environment, predicate)
    ]

    subject = _subject_name(declaration, [predicate, *indices, *predicates])

    conclusion = apply(Var(predicate), Var(subject))

    if deep:
        conclusion = Arr(
            apply(
                LiftRef(declaration.name),
                *map(Var, indices),
                *map(Var, predicates),
                Var(subject),
            ),
            conclusion,
        )

    statement = telescope(
        binders, arrows(hypotheses, Pi(subject, carrier, conclusion))
    )

    name = (
        witness_name(declaration.name)
        if deep
        else structural_rule_name(declaration.name)
    )

    return RuleDef(
        name, RuleKind.DEEP if deep else RuleKind.STRUCTURAL, statement, ()
    )


def derive_deep_rule(
    declaration: DataDecl, environment, monomorphic: bool = False
) -> RuleDef:
    """Derives the deep induction rule ``dInd{G}`` of a declaration,

    ``forall P -> dInd{C1} P -> ... -> forall A Q_A (y : G A) -> G^ A Q_A y ->
    P A Q_A y``

    Parameters
    ----------
    declaration
        The declaration to derive the rule of.
    environment
        The environment the declaration was classified in.
    monomorphic
        Whether to fix the indices of an ADT outside of the rule predicate,
        yielding the familiar rules of lists and rose trees with the induction
        hypotheses inlined.

    Raises
    ------
    DiagnosticError
        With a NULLARY_DECLARATION or TRULY_NESTED_GADT diagnostic.
    """

    if _is_monomorphic(declaration, monomorphic):
        return _monomorphic_rule(declaration, environment, deep=True)

    hypotheses = derive_hypotheses(declaration, environment)

    logger.debug(f"deriving the deep induction rule of {declaration.name}")

    predicate = rule_predicate_name(declaration)

    statement = _rule_statement(
        predicate,
        deep_predicate_type(declaration),
        hypotheses,
        deep_conclusion(declaration, predicate),
    )

    return RuleDef(
        witness_name(declaration.name), RuleKind.DEEP, statement, tuple(hypotheses)
    )


def derive_structural_rule(
    declaration: DataDecl, environment, monomorphic: bool = False
) -> RuleDef:
    """Derives the structural induction rule ``ind{G}`` of a declaration, which
    only asks the predicate to be preserved at the recursive positions."""

    if _is_monomorphic(declaration, monomorphic):
        return _monomorphic_rule(declaration, environment, deep=False)

    hypotheses = derive_structural_hypotheses(declaration, environment)

    logger.debug(f"deriving the structural induction rule of {declaration.name}")

    predicate = rule_predicate_name(declaration)

    statement = _rule_statement(
        predicate,
        structural_predicate_type(declaration),
        hypotheses,
        structural_conclusion(declaration, predicate),
    )

    return RuleDef(
        structural_rule_name(declaration.name),
        RuleKind.STRUCTURAL,
        statement,
        tuple(hypotheses),
    )
