"""Prints declarations back into the surface language."""
from typing import Iterable, List, Set

from deepind.library.core.declarations import (
    Binder,
    ConstructorDecl,
    DataDecl,
    index_names,
)
from deepind.library.core.types import (
    BUILTIN_TYPES,
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TVar,
    TypeExpr,
    substitute,
)

_ARROW, _SUM, _PRODUCT, _APPLICATION, _ATOM = range(5)


def print_type(type_expr: TypeExpr, context: int = _ARROW) -> str:

    if isinstance(type_expr, TVar):
        return type_expr.name
    if isinstance(type_expr, TUnit):
        return "Unit"

    if isinstance(type_expr, TData):

        if len(type_expr.args) == 0:
            return type_expr.name

        text, level = (
            " ".join(
                [type_expr.name, *(print_type(arg, _ATOM) for arg in type_expr.args)]
            ),
            _APPLICATION,
        )

    elif isinstance(type_expr, TProduct):

        text, level = (
            f"{print_type(type_expr.left, _APPLICATION)} * "
            f"{print_type(type_expr.right, _PRODUCT)}",
            _PRODUCT,
        )

    elif isinstance(type_expr, TSum):

        text, level = (
            f"{print_type(type_expr.left, _PRODUCT)} + "
            f"{print_type(type_expr.right, _SUM)}",
            _SUM,
        )

    elif isinstance(type_expr, TArrow):

        text, level = (
            f"{print_type(type_expr.domain, _SUM)} -> "
            f"{print_type(type_expr.codomain, _ARROW)}",
            _ARROW,
        )

    else:
        raise NotImplementedError()

    return f"({text})" if level < context else text


def _binder_groups(binders: Iterable[Binder]) -> str:

    groups: List[List[Binder]] = []

    for binder in binders:

        if len(groups) > 0 and groups[-1][0].implicit == binder.implicit:
            groups[-1].append(binder)
        else:
            groups.append([binder])

    return " ".join(
        ("{{{} : Set}}" if group[0].implicit else "({} : Set)").format(
            " ".join(binder.name for binder in group)
        )
        for group in groups
    )


def _normalize(constructor: ConstructorDecl, reserved: Set[str]) -> ConstructorDecl:
    """Renames the binders of a constructor to A, B, C ... in order."""

    count = len(constructor.binders)

    candidates = index_names(count + len(reserved))
    names = [name for name in candidates if name not in reserved][:count]

    mapping = {
        binder.name: TVar(name) for binder, name in zip(constructor.binders, names)
    }

    return ConstructorDecl(
        constructor.name,
        tuple(
            Binder(name, binder.implicit)
            for binder, name in zip(constructor.binders, names)
        ),
        tuple(substitute(argument, mapping) for argument in constructor.domain),
        tuple(substitute(index, mapping) for index in constructor.indices),
    )


def print_constructor(constructor: ConstructorDecl, declaration: DataDecl) -> str:

    return_type = TData(declaration.name, constructor.indices)

    parts = [print_type(argument, _SUM) for argument in constructor.domain]
    parts.append(print_type(return_type))

    quantifier = (
        ""
        if len(constructor.binders) == 0
        else f"forall {_binder_groups(constructor.binders)} . "
    )

    return f"{constructor.name} : {quantifier}{' -> '.join(parts)}"


def print_declaration(
    declaration: DataDecl, reserved: Iterable[str] = (), normalize: bool = True
) -> str:
    """Prints a declaration, optionally renaming the binders of each of its
    constructors to A, B, C ... while avoiding the type constructor names in
    ``reserved``."""

    reserved = {*reserved, *BUILTIN_TYPES, declaration.name}

    signature = " -> ".join(["Set"] * (declaration.arity + 1))
    lines = [f"data {declaration.name} : {signature} where"]

    for constructor in declaration.constructors:

        if normalize:
            constructor = _normalize(constructor, reserved)

        lines.append(f"  {print_constructor(constructor, declaration)}")

    return "\n".join(lines)


def print_module(module, normalize: bool = True) -> str:
    """Prints the declarations of a ``SourceModule`` in source order, separated
    by blank lines, such that parsing the output yields a module equal to
    ``module`` up to the names of constructor binders."""

    reserved = [
        *(declaration.name for declaration in module.declarations),
        *(declaration.name for declaration in module.prelude),
    ]

    blocks = [
        print_declaration(declaration, reserved, normalize)
        for declaration in module.declarations
    ]

    text = "\n\n".join(blocks)

    return "" if len(blocks) == 0 else f"{text}\n"
