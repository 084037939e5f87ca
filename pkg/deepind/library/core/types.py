"""The first-order type expressions used inside data declarations."""
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

SourceSpan = Optional[Tuple[int, int]]

BUILTIN_TYPES = {"Bool": 0, "String": 0}
"""Opaque builtin types and their arities. ``Equal`` and ``List`` are provided
by the prelude instead."""


@dataclass(frozen=True)
class TypeExpr:
    """The base class of all type expressions."""


@dataclass(frozen=True)
class TVar(TypeExpr):
    name: str
    span: SourceSpan = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TData(TypeExpr):
    """A type constructor applied to its (possibly empty) list of arguments."""

    name: str
    args: Tuple[TypeExpr, ...] = ()
    span: SourceSpan = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TProduct(TypeExpr):
    left: TypeExpr
    right: TypeExpr
    span: SourceSpan = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TSum(TypeExpr):
    left: TypeExpr
    right: TypeExpr
    span: SourceSpan = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TArrow(TypeExpr):
    domain: TypeExpr
    codomain: TypeExpr
    span: SourceSpan = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TUnit(TypeExpr):
    span: SourceSpan = field(default=None, compare=False, repr=False)


def children(type_expr: TypeExpr) -> Tuple[TypeExpr, ...]:

    if isinstance(type_expr, TData):
        return type_expr.args
    if isinstance(type_expr, (TProduct, TSum)):
        return type_expr.left, type_expr.right
    if isinstance(type_expr, TArrow):
        return type_expr.domain, type_expr.codomain

    return ()


def walk(type_expr: TypeExpr) -> Iterator[TypeExpr]:
    """Yields ``type_expr`` and all of its sub-expressions in pre-order."""

    yield type_expr

    for child in children(type_expr):
        yield from walk(child)


def free_variables(type_expr: TypeExpr) -> List[str]:
    """Returns the distinct variable names of an expression in order of first
    occurrence."""

    names = []

    for node in walk(type_expr):

        if isinstance(node, TVar) and node.name not in names:
            names.append(node.name)

    return names


def mentions(type_expr: TypeExpr, data_name: str) -> bool:
    """Returns whether the type constructor ``data_name`` occurs anywhere in the
    expression."""
    return any(
        isinstance(node, TData) and node.name == data_name for node in walk(type_expr)
    )


def substitute(type_expr: TypeExpr, mapping: Dict[str, TypeExpr]) -> TypeExpr:

    if isinstance(type_expr, TVar):
        return mapping.get(type_expr.name, type_expr)
    if isinstance(type_expr, TData):
        return TData(
            type_expr.name,
            tuple(substitute(arg, mapping) for arg in type_expr.args),
            type_expr.span,
        )
    if isinstance(type_expr, TProduct):
        return TProduct(
            substitute(type_expr.left, mapping),
            substitute(type_expr.right, mapping),
            type_expr.span,
        )
    if isinstance(type_expr, TSum):
        return TSum(
            substitute(type_expr.left, mapping),
            substitute(type_expr.right, mapping),
            type_expr.span,
        )
    if isinstance(type_expr, TArrow):
        return TArrow(
            substitute(type_expr.domain, mapping),
            substitute(type_expr.codomain, mapping),
            type_expr.span,
        )

    return type_expr


def head_name(type_expr: TypeExpr) -> str:
    """A short name describing the outermost type former, used when naming
    postulated lemmas, e.g. ``B * C`` -> ``Pair``."""

    if isinstance(type_expr, TProduct):
        return "Pair"
    if isinstance(type_expr, TSum):
        return "Sum"
    if isinstance(type_expr, TArrow):
        return "Arr"
    if isinstance(type_expr, TUnit):
        return "Unit"
    if isinstance(type_expr, TData):
        return type_expr.name

    return ""


def skeleton_name(type_expr: TypeExpr) -> str:
    """Concatenates the type formers of an expression in pre-order, ignoring
    variables, e.g. ``List (B * C)`` -> ``ListPair``."""
    return "".join(head_name(node) for node in walk(type_expr))
