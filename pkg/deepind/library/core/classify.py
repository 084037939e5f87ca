from deepind.library.core.declarations import Classification, DataDecl
from deepind.library.core.types import TData, TVar, mentions, walk


def _is_truly_nested(declaration: DataDecl) -> bool:

    return any(
        isinstance(node, TData)
        and node.name == declaration.name
        and any(mentions(arg, declaration.name) for arg in node.args)
        for constructor in declaration.constructors
        for argument in constructor.domain
        for node in walk(argument)
    )


def _is_gadt(declaration: DataDecl) -> bool:

    return any(
        not constructor.has_variable_return or len(constructor.constraints) > 0
        for constructor in declaration.constructors
    )


def _is_adt(declaration: DataDecl) -> bool:

    for constructor in declaration.constructors:

        expected = tuple(TVar(name) for name in constructor.return_variables)

        for argument in constructor.domain:
            for node in walk(argument):

                if (
                    isinstance(node, TData)
                    and node.name == declaration.name
                    and node.args != expected
                ):
                    return False

    return True


def classify_decl(declaration: DataDecl, environment=None) -> Classification:
    """Classifies a name resolved declaration.

    A declaration is a GADT when some constructor returns a structured (or
    repeated variable) instance, or carries an equality constraint on one of
    its return variables. It is truly nested when the declared type occurs
    inside the arguments of one of its own applications.
    """

    truly_nested = _is_truly_nested(declaration)

    if _is_gadt(declaration):

        return (
            Classification.TRULY_NESTED_GADT
            if truly_nested
            else Classification.GADT
        )

    if truly_nested:
        return Classification.TRULY_NESTED_TYPE

    return Classification.ADT if _is_adt(declaration) else Classification.NESTED_TYPE
