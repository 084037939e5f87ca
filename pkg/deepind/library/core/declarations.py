from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from deepind.library.core.types import SourceSpan, TData, TVar, TypeExpr

EQUAL = "Equal"
"""The name of the builtin base GADT."""


class Classification(Enum):

    ADT = "ADT"
    NESTED_TYPE = "NestedType"
    TRULY_NESTED_TYPE = "TrulyNestedType"
    GADT = "GADT"
    TRULY_NESTED_GADT = "TrulyNestedGADT"

    @property
    def is_gadt(self) -> bool:
        return self in (Classification.GADT, Classification.TRULY_NESTED_GADT)

    @property
    def is_truly_nested(self) -> bool:
        return self in (
            Classification.TRULY_NESTED_TYPE,
            Classification.TRULY_NESTED_GADT,
        )


@dataclass(frozen=True)
class Binder:
    name: str
    implicit: bool = False


@dataclass(frozen=True)
class ConstructorDecl:
    """A data constructor ``c : forall binders. domain -> G indices``.

    Equality constraints are not stored separately: they are the leading
    ``Equal X K`` domain arguments whose ``X`` is a return variable, and are
    exposed through ``constraints``.
    """

    name: str
    binders: Tuple[Binder, ...]
    domain: Tuple[TypeExpr, ...]
    indices: Tuple[TypeExpr, ...]

    span: SourceSpan = field(default=None, compare=False, repr=False)

    @property
    def binder_names(self) -> List[str]:
        return [binder.name for binder in self.binders]

    @property
    def has_variable_return(self) -> bool:
        """Whether every return index is a distinct plain variable."""

        names = [index.name for index in self.indices if isinstance(index, TVar)]
        return len(names) == len(self.indices) and len(set(names)) == len(names)

    @property
    def return_variables(self) -> List[str]:

        if not self.has_variable_return:
            return []

        return [index.name for index in self.indices]

    @property
    def constraints(self) -> List[Tuple[str, TypeExpr]]:
        """The leading ``Equal X K`` domain arguments constraining a return
        variable ``X``, as ``(X, K)`` pairs."""

        return_variables = self.return_variables
        constraints = []

        for argument in self.domain:

            if not (
                isinstance(argument, TData)
                and argument.name == EQUAL
                and len(argument.args) == 2
                and isinstance(argument.args[0], TVar)
                and argument.args[0].name in return_variables
            ):
                break

            constraints.append((argument.args[0].name, argument.args[1]))

        return constraints

    @property
    def arguments(self) -> Tuple[TypeExpr, ...]:
        """The domain arguments which follow the equality constraints."""
        return self.domain[len(self.constraints) :]

    @property
    def index_binders(self) -> List[str]:
        """The binders which are not return variables."""

        return_variables = self.return_variables
        return [name for name in self.binder_names if name not in return_variables]


@dataclass(frozen=True)
class DataDecl:

    name: str
    arity: int
    constructors: Tuple[ConstructorDecl, ...]

    classification: Optional[Classification] = None

    span: SourceSpan = field(default=None, compare=False, repr=False)

    def constructor(self, name: str) -> ConstructorDecl:

        for constructor in self.constructors:

            if constructor.name == name:
                return constructor

        raise KeyError(name)

    @property
    def is_equal(self) -> bool:
        return self.name == EQUAL and self.arity == 2


def index_names(arity: int) -> List[str]:
    """Canonical names for the indices of a declaration: A, B, C ... and then
    A1, B1, ... once the alphabet is exhausted."""

    letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"

    return [
        letters[index % len(letters)]
        + ("" if index < len(letters) else str(index // len(letters)))
        for index in range(arity)
    ]
