"""The rejection of truly nested GADTs."""
from typing import List, Optional

from deepind.library.core.declarations import (
    Classification,
    ConstructorDecl,
    DataDecl,
)
from deepind.library.core.naming import lift_map_name, lifting_name
from deepind.library.core.shapes import shape_of
from deepind.library.core.terms import Var, type_to_term
from deepind.library.core.types import TData, free_variables, mentions, walk
from deepind.library.encode import encode_constructor
from deepind.library.lift.shapes import lift_type
from deepind.library.models.diagnostics import (
    Diagnostic,
    DiagnosticCode,
    make_diagnostic,
)
from deepind.library.syntax.pretty import pretty_term
from deepind.library.utilities.exceptions import DiagnosticError


def _offending_constructor(declaration: DataDecl) -> Optional[ConstructorDecl]:
    """The first constructor in which the declared type occurs beneath an
    application of itself."""

    for constructor in declaration.constructors:
        for argument in constructor.domain:
            for node in walk(argument):

                if (
                    isinstance(node, TData)
                    and node.name == declaration.name
                    and any(mentions(arg, declaration.name) for arg in node.args)
                ):
                    return constructor

    return None


def _failed_obligation(
    declaration: DataDecl, constructor: Optional[ConstructorDecl]
) -> str:
    """Describes the equality between liftings which a map function would have
    to transport, preferring a constraint of the offending constructor."""

    candidates = [
        *([] if constructor is None else [constructor]),
        *declaration.constructors,
    ]

    for candidate in candidates:
        for variable, index in encode_constructor(candidate).constraints:

            names = free_variables(index)

            if len(names) == 0:
                continue

            primed = [f"Q'_{name}" for name in names]
            lifted = lift_type(index, {name: Var(f"Q'_{name}") for name in names})

            return (
                f"from a proof that Q is equal to the lifting at the index "
                f"{pretty_term(type_to_term(index))} of constructor "
                f"{candidate.name} and a morphism of predicates m : PredMap "
                f"{variable} Q Q', there need not exist "
                f"{'a predicate' if len(primed) == 1 else 'predicates'} "
                f"{' '.join(primed)} for which Q' is equal to "
                f"{pretty_term(lifted)}."
            )

    return "a map function cannot carry the equality constraints between liftings."


def truly_nested_gadt_diagnostic(declaration: DataDecl) -> Diagnostic:

    constructor = _offending_constructor(declaration)

    name = lifting_name(declaration.name)
    map_name = f"{name}Map"

    explanation = "\n".join(
        [
            f"{declaration.name} occurs beneath an application of itself in "
            f"constructor {constructor.name}, so its soundness witness needs a map",
            f"function {map_name} (a {lift_map_name(declaration.name)}) for the "
            f"lifting {name}.",
            "Such a map cannot be defined for a GADT: "
            + _failed_obligation(declaration, constructor),
        ]
    )

    return make_diagnostic(
        DiagnosticCode.TRULY_NESTED_GADT,
        f"{declaration.name} is a truly nested GADT and does not admit a derivable "
        f"deep induction rule: we cannot define {map_name}",
        constructor.span if constructor.span is not None else declaration.span,
        explanation,
        declaration.name,
    )


def ensure_derivable(declaration: DataDecl):
    """Raises the diagnostics which prevent deriving any artifact from a
    declaration.

    Raises
    ------
    DiagnosticError
        With a NULLARY_DECLARATION or TRULY_NESTED_GADT diagnostic.
    """

    if declaration.arity == 0:

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.NULLARY_DECLARATION,
                    f"{declaration.name} has no indices, so it carries no custom "
                    f"predicates to lift",
                    declaration.span,
                    declaration=declaration.name,
                )
            ]
        )

    if declaration.classification == Classification.TRULY_NESTED_GADT:
        raise DiagnosticError([truly_nested_gadt_diagnostic(declaration)])


def check_declaration(declaration: DataDecl, environment) -> List[Diagnostic]:
    """Validates every constructor argument of a declaration against the
    argument grammar, returning the diagnostics of each violation together
    with the rejection of a truly nested GADT."""

    if declaration.is_equal:
        return []

    diagnostics = []

    allow_nesting = declaration.classification.is_truly_nested

    for constructor in declaration.constructors:
        for argument in encode_constructor(constructor).arguments:

            try:
                shape_of(argument, declaration.name, environment, allow_nesting)
            except DiagnosticError as error:
                diagnostics.extend(error.diagnostics)

    if declaration.classification == Classification.TRULY_NESTED_GADT:
        diagnostics.append(truly_nested_gadt_diagnostic(declaration))

    return diagnostics
