"""Rewrites structured constructor return types into equality constraints."""
import logging
from dataclasses import replace

from deepind.library.core.classify import classify_decl
from deepind.library.core.declarations import (
    EQUAL,
    Binder,
    Classification,
    ConstructorDecl,
    DataDecl,
)
from deepind.library.core.naming import NameSupply
from deepind.library.core.types import TData, TVar, free_variables
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)


def encode_constructor(constructor: ConstructorDecl) -> ConstructorDecl:
    """Returns the Henry Ford form of a single constructor.

    The first occurrence of a plain variable index is kept as a return variable.
    Every other index is replaced by a fresh variable ``Ai`` and the argument
    ``Equal Ai K`` is prepended to the domain, in index order.
    """

    if constructor.has_variable_return:
        return constructor

    supply = NameSupply(
        [
            *constructor.binder_names,
            *(name for index in constructor.indices for name in free_variables(index)),
        ]
    )

    indices, constraints, return_variables = [], [], []

    for index in constructor.indices:

        if isinstance(index, TVar) and index.name not in return_variables:

            indices.append(index)
            return_variables.append(index.name)

            continue

        variable = TVar(supply.fresh("A"))

        indices.append(variable)
        constraints.append(TData(EQUAL, (variable, index), index.span))

        return_variables.append(variable.name)

    binders = (
        *(Binder(name, implicit=True) for name in return_variables),
        *(
            Binder(binder.name, implicit=False)
            for binder in constructor.binders
            if binder.name not in return_variables
        ),
    )

    return ConstructorDecl(
        constructor.name,
        binders,
        (*constraints, *constructor.domain),
        tuple(indices),
        constructor.span,
    )


def henry_ford(declaration: DataDecl) -> DataDecl:
    """Returns the Henry Ford encoding of a declaration: every constructor
    returns the declared type at distinct variables and any structured index is
    instead witnessed by a leading ``Equal`` argument.

    ``Equal`` itself is treated as primitive and returned unchanged, as are
    declarations whose constructors already return variable instances.

    Raises
    ------
    DiagnosticError
        With a TRULY_NESTED diagnostic if the declaration is a truly nested GADT.
    """

    if declaration.is_equal:
        return declaration

    classification = (
        declaration.classification
        if declaration.classification is not None
        else classify_decl(declaration)
    )

    if classification == Classification.TRULY_NESTED_GADT:

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.TRULY_NESTED,
                    f"{declaration.name} is a truly nested GADT and has no Henry "
                    f"Ford encoding suitable for deriving induction rules",
                    declaration.span,
                    declaration=declaration.name,
                )
            ]
        )

    constructors = tuple(
        encode_constructor(constructor) for constructor in declaration.constructors
    )

    logger.debug(
        f"encoded {declaration.name}: "
        + ", ".join(
            constructor.name
            for constructor, original in zip(constructors, declaration.constructors)
            if constructor is not original
        )
    )

    return replace(
        declaration, constructors=constructors, classification=classification
    )
