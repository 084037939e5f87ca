from typing import Iterable

from deepind.library.core.types import TArrow, TData, TProduct, TSum, TVar, TypeExpr
from deepind.library.core.types import free_variables as type_variables
from deepind.library.utilities.string import capitalize_first, subscript_name


class NameSupply:
    """Hands out names which are distinct from each other and from a set of
    reserved names."""

    def __init__(self, reserved: Iterable[str] = ()):
        self._used = set(reserved)

    def __contains__(self, name: str) -> bool:
        return name in self._used

    def reserve(self, *names: str):
        self._used.update(names)

    def fresh(self, base: str) -> str:

        index = 0

        while subscript_name(base, index) in self._used:
            index += 1

        name = subscript_name(base, index)
        self._used.add(name)

        return name


def predicate_name(variable: str) -> str:
    return f"Q_{variable}"


def argument_base_name(type_expr: TypeExpr) -> str:
    """A readable variable name for a constructor argument of the given type,
    e.g. ``A`` -> ``a`` and ``Seq B`` -> ``s_B``."""

    if isinstance(type_expr, TVar):
        return type_expr.name.lower()

    if isinstance(type_expr, TData):

        variables = "".join(type_variables(type_expr))
        base = type_expr.name[0].lower()

        return base if len(variables) == 0 else f"{base}_{variables}"

    if isinstance(type_expr, TArrow):
        return "f"
    if isinstance(type_expr, (TProduct, TSum)):
        return "p"

    return "u"


def hypothesis_name(constructor: str) -> str:
    return f"dInd{capitalize_first(constructor)}"


def structural_hypothesis_name(constructor: str) -> str:
    return f"sInd{capitalize_first(constructor)}"


def case_parameter_name(constructor: str) -> str:
    """The name of the witness parameter standing for a constructor's
    hypothesis, e.g. ``pair`` -> ``cpair``."""
    return f"c{constructor}"


def witness_name(declaration: str) -> str:
    return f"dInd{declaration}"


def structural_rule_name(declaration: str) -> str:
    return f"ind{declaration}"


def lifting_name(declaration: str) -> str:
    return f"{declaration}^"


def lift_map_name(declaration: str) -> str:
    return f"lift{declaration}Map"


def kt_name(declaration: str) -> str:
    return f"{declaration}^KT"


def equal_map_name(declaration: str) -> str:
    return f"{declaration}^EqualMap"


def postulate_name(skeleton: str) -> str:
    return f"Equal^{skeleton}KT"
