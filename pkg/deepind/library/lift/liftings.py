"""Predicate liftings of data declarations."""
import logging
from typing import Dict, List

from deepind.library.core.declarations import DataDecl, index_names
from deepind.library.core.naming import lifting_name, predicate_name
from deepind.library.core.terms import (
    Arr,
    Clause,
    LiftingDef,
    LiftRef,
    PVar,
    SetSort,
    Sig,
    Term,
    Var,
    apply,
    conjunction,
    data_type,
    definition_terms,
    subterms,
    telescope,
    type_to_term,
)
from deepind.library.core.views import ConstructorView, view_constructor
from deepind.library.encode import henry_ford
from deepind.library.lift.builtins import builtin_lifting, is_builtin_lifting
from deepind.library.lift.obstruction import ensure_derivable
from deepind.library.lift.shapes import lift_type, lifting_premise

logger = logging.getLogger(__name__)


def lifting_signature(name: str, arity: int) -> Term:
    """``forall (A : Set) -> (A -> Set) -> G A -> Set`` generalised to one
    index and one predicate per index."""

    indices = index_names(arity)

    body = Arr(data_type(name, *(Var(index) for index in indices)), SetSort())

    for index in reversed(indices):
        body = Arr(Arr(Var(index), SetSort()), body)

    return telescope([(index, SetSort()) for index in indices], body)


def constraint_premises(view: ConstructorView) -> List[Term]:
    """``Equal^ A K Q_A K^ e`` for each equality constraint of a constructor."""

    predicates = view.predicates

    return [
        apply(
            LiftRef("Equal"),
            Var(variable),
            type_to_term(index),
            predicates[variable],
            lift_type(index, predicates),
            Var(proof),
        )
        for (variable, index), proof in zip(view.constraints, view.constraint_names)
    ]


def argument_premises(view: ConstructorView, recursive) -> List[Term]:
    """The lifting premise of each constructor argument whose lifting is not
    constantly true, in argument order."""

    premises = [
        lifting_premise(
            argument.shape,
            Var(argument.name),
            recursive,
            view.predicates,
            view.supply,
        )
        for argument in view.arguments
    ]

    return [premise for premise in premises if premise is not None]


def declaration_views(
    declaration: DataDecl, environment, reserved=()
) -> List[ConstructorView]:
    """The views of each (Henry Ford encoded) constructor of a declaration."""

    return [
        view_constructor(declaration, constructor, environment, reserved)
        for constructor in declaration.constructors
    ]


def _lifting_clause(view: ConstructorView, declaration: DataDecl) -> Clause:

    premises = [
        *constraint_premises(view),
        *argument_premises(view, LiftRef(declaration.name)),
    ]

    body = conjunction(premises)

    for binder in reversed(view.index_binders):
        body = Sig(predicate_name(binder), Arr(Var(binder), SetSort()), body)

    patterns = (
        *(PVar(name) for name in view.return_variables),
        *(PVar(predicate_name(name)) for name in view.return_variables),
        view.pattern(),
    )

    return Clause(patterns, body)


def derive_data_lifting(declaration: DataDecl, environment) -> LiftingDef:
    """Derives the predicate lifting ``G^`` of a declaration.

    Each constructor contributes one clause which existentially quantifies a
    predicate per index binder, then conjoins the lifted equality constraints
    and the liftings of the constructor arguments, the latter taken at ``G^``
    itself.

    Raises
    ------
    DiagnosticError
        With a NULLARY_DECLARATION or TRULY_NESTED_GADT diagnostic.
    """

    if declaration.is_equal:
        return builtin_lifting("Equal")

    ensure_derivable(declaration)

    logger.debug(f"deriving the lifting of {declaration.name}")

    encoded = henry_ford(declaration)

    clauses = tuple(
        _lifting_clause(view, encoded)
        for view in declaration_views(encoded, environment)
    )

    return LiftingDef(
        lifting_name(declaration.name),
        lifting_signature(declaration.name, declaration.arity),
        clauses,
        declaration.name,
    )


def referenced_liftings(lifting: LiftingDef) -> List[str]:
    """The distinct names of the liftings a lifting refers to, in order of
    first reference."""

    names = []

    for term in definition_terms(lifting):
        for node in subterms(term):

            if isinstance(node, LiftRef) and node.name not in names:
                names.append(node.name)

    return names


class LiftingRegistry:
    """Derives and caches the liftings of the declarations of an environment
    and of the builtin type formers."""

    def __init__(self, environment):

        self._environment = environment
        self._liftings: Dict[str, LiftingDef] = {}

    @property
    def environment(self):
        return self._environment

    def __contains__(self, name: str) -> bool:
        return is_builtin_lifting(name) or name in self._environment

    def lifting(self, name: str) -> LiftingDef:

        if name not in self._liftings:

            declaration = self._environment.get(name)

            self._liftings[name] = (
                builtin_lifting(name)
                if declaration is None
                else derive_data_lifting(declaration, self._environment)
            )

        return self._liftings[name]
