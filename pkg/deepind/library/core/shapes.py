"""Classification of constructor domain arguments against the grammar of
admissible constructor arguments."""
from dataclasses import dataclass
from typing import Tuple

from deepind.library.core.declarations import EQUAL
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TypeExpr,
    mentions,
)
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError


@dataclass(frozen=True)
class ShapeF:
    """The base class of grammar parse trees. Every node records the type
    expression it was produced from."""

    source: TypeExpr


@dataclass(frozen=True)
class ConstS(ShapeF):
    """A sub-expression which does not mention the declared type."""


@dataclass(frozen=True)
class RecS(ShapeF):
    """The declared type applied to arguments which do not mention it."""

    args: Tuple[TypeExpr, ...]


@dataclass(frozen=True)
class NestedS(ShapeF):
    """Another (functorial) type constructor applied to arguments some of
    which mention the declared type."""

    head: str
    children: Tuple[ShapeF, ...]


@dataclass(frozen=True)
class TrulyNestedS(ShapeF):
    """The declared type applied to arguments which mention it again."""

    children: Tuple[ShapeF, ...]


@dataclass(frozen=True)
class ProductS(ShapeF):
    left: ShapeF
    right: ShapeF


@dataclass(frozen=True)
class SumS(ShapeF):
    left: ShapeF
    right: ShapeF


@dataclass(frozen=True)
class ArrowS(ShapeF):
    domain: TypeExpr
    codomain: ShapeF


def shape_of(argument: TypeExpr, name: str, environment, allow_nesting=False) -> ShapeF:
    """Returns the unique grammar parse of a constructor domain argument of the
    declaration ``name``.

    Parameters
    ----------
    argument
        The domain argument to classify.
    name
        The name of the declaration which owns the constructor.
    environment
        The environment used to look up the classification of other type
        constructors.
    allow_nesting
        Whether the declared type may occur inside the arguments of one of its
        own applications, as it does in truly nested types.

    Raises
    ------
    DiagnosticError
        With a GRAMMAR_VIOLATION, NESTED_G or H_IS_GADT diagnostic.
    """

    if not mentions(argument, name):
        return ConstS(argument)

    if isinstance(argument, TData) and argument.name == name:

        if not any(mentions(arg, name) for arg in argument.args):
            return RecS(argument, argument.args)

        if not allow_nesting:

            raise DiagnosticError(
                [
                    make_diagnostic(
                        DiagnosticCode.NESTED_G,
                        f"{name} occurs inside the arguments of an application of "
                        f"{name}",
                        argument.span,
                        declaration=name,
                    )
                ]
            )

        return TrulyNestedS(
            argument,
            tuple(
                shape_of(arg, name, environment, allow_nesting) for arg in argument.args
            ),
        )

    if isinstance(argument, TData):

        classification = environment.classification(argument.name)

        if argument.name == EQUAL or (
            classification is not None and classification.is_gadt
        ):

            raise DiagnosticError(
                [
                    make_diagnostic(
                        DiagnosticCode.H_IS_GADT,
                        f"{name} occurs beneath {argument.name}, which is a GADT and "
                        f"so has no map function for its lifting",
                        argument.span,
                        declaration=name,
                    )
                ]
            )

        return NestedS(
            argument,
            argument.name,
            tuple(
                shape_of(arg, name, environment, allow_nesting) for arg in argument.args
            ),
        )

    if isinstance(argument, (TProduct, TSum)):

        node_type = ProductS if isinstance(argument, TProduct) else SumS

        return node_type(
            argument,
            shape_of(argument.left, name, environment, allow_nesting),
            shape_of(argument.right, name, environment, allow_nesting),
        )

    if isinstance(argument, TArrow):

        if mentions(argument.domain, name):

            raise DiagnosticError(
                [
                    make_diagnostic(
                        DiagnosticCode.GRAMMAR_VIOLATION,
                        f"{name} occurs in the domain of a function type",
                        argument.span,
                        declaration=name,
                    )
                ]
            )

        return ArrowS(
            argument,
            argument.domain,
            shape_of(argument.codomain, name, environment, allow_nesting),
        )

    raise NotImplementedError()
