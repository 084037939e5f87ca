"""A direct check that every primitive leaf of a value satisfies its predicate,
computed by traversing the value against its type rather than through a
derived lifting."""
import itertools
from typing import Dict, Mapping, Optional

from deepind.library.core.declarations import EQUAL, DataDecl
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TVar,
    TypeExpr,
    substitute,
)
from deepind.library.interp.enumeration import Enumerator
from deepind.library.interp.values import (
    REFL,
    Con,
    FunctionValue,
    PairValue,
    Predicate,
    Value,
    all_tables,
)


class LeafOracle:
    """Decides whether the leaves of a value satisfy a family of predicates.

    Values of data types are traversed through the constructor which built
    them: the predicates of the instance flow to the return variables of the
    constructor, the predicates of its remaining binders are searched for, and
    every equality constraint requires the two predicates it relates to agree.
    """

    def __init__(self, enumerator: Enumerator):
        self.enumerator = enumerator

    @property
    def environment(self):
        return self.enumerator.environment

    def _carrier(self, type_expr: TypeExpr, types: Mapping[str, TypeExpr]):
        return self.enumerator.values(substitute(type_expr, dict(types)))

    def _predicate(self, type_expr, types, predicates) -> Predicate:
        return lambda value: self.holds(type_expr, value, types, predicates)

    def _constructor(
        self,
        declaration: DataDecl,
        instance: TData,
        value: Con,
        types: Mapping[str, TypeExpr],
        predicates: Mapping[str, Predicate],
    ) -> bool:

        constructor = declaration.constructor(value.constructor)

        return_variables = constructor.return_variables
        index_binders = constructor.index_binders

        inner_types: Dict[str, TypeExpr] = {
            **{
                name: substitute(index, dict(types))
                for name, index in zip(return_variables, instance.args)
            },
            **dict(zip(index_binders, value.types)),
        }
        inner_predicates: Dict[str, Predicate] = {
            name: self._predicate(index, types, predicates)
            for name, index in zip(return_variables, instance.args)
        }

        constraints = constructor.constraints
        arguments = value.args[len(constraints) :]

        searches = [
            all_tables(
                self.enumerator.values(inner_types[name]),
                self.enumerator.model.table_cap,
            )
            for name in index_binders
        ]

        for tables in itertools.product(*(list(search) for search in searches)):

            candidate = {**inner_predicates, **dict(zip(index_binders, tables))}

            satisfied = all(
                inner_predicates[variable](item)
                == self.holds(index, item, inner_types, candidate)
                for variable, index in constraints
                for item in self.enumerator.values(inner_types[variable])
            ) and all(
                self.holds(argument_type, argument, inner_types, candidate)
                for argument_type, argument in zip(constructor.arguments, arguments)
            )

            if satisfied:
                return True

        return False

    def holds(
        self,
        type_expr: TypeExpr,
        value: Value,
        types: Optional[Mapping[str, TypeExpr]] = None,
        predicates: Optional[Mapping[str, Predicate]] = None,
    ) -> bool:
        """Whether every leaf of ``value``, an inhabitant of ``type_expr``,
        satisfies the predicate of the type variable it inhabits.

        Parameters
        ----------
        type_expr
            The type of the value, possibly mentioning the variables of
            ``types`` and ``predicates``.
        value
            The value to traverse.
        types
            The type each variable of ``type_expr`` stands for. Variables
            missing from it stand for themselves.
        predicates
            The predicate of each variable of ``type_expr``.
        """

        types = {} if types is None else types
        predicates = {} if predicates is None else predicates

        if isinstance(type_expr, TVar):
            return bool(predicates[type_expr.name](value))

        if isinstance(type_expr, TUnit):
            return True

        if isinstance(type_expr, TProduct):

            assert isinstance(value, PairValue)

            return self.holds(type_expr.left, value.left, types, predicates) and (
                self.holds(type_expr.right, value.right, types, predicates)
            )

        if isinstance(type_expr, TSum):

            assert isinstance(value, Con) and value.constructor in ("inl", "inr")

            branch = type_expr.left if value.constructor == "inl" else type_expr.right
            return self.holds(branch, value.args[0], types, predicates)

        if isinstance(type_expr, TArrow):

            assert isinstance(value, FunctionValue)

            return all(
                (not self.holds(type_expr.domain, item, types, predicates))
                or self.holds(type_expr.codomain, value(item), types, predicates)
                for item in self._carrier(type_expr.domain, types)
            )

        assert isinstance(type_expr, TData)

        if len(type_expr.args) == 0:
            return True

        declaration = self.environment.get(type_expr.name)

        if type_expr.name == EQUAL and (declaration is None or declaration.is_equal):

            left, right = type_expr.args

            return value == REFL and all(
                self.holds(left, item, types, predicates)
                == self.holds(right, item, types, predicates)
                for item in self._carrier(left, types)
            )

        assert isinstance(value, Con)

        return self._constructor(declaration, type_expr, value, types, predicates)


def leaf_oracle(
    declaration: DataDecl,
    index_types,
    predicates,
    value: Value,
    enumerator: Enumerator,
) -> bool:
    """Whether every primitive leaf of ``value``, an inhabitant of
    ``declaration`` at ``index_types``, satisfies the predicate given for the
    index it inhabits.

    Parameters
    ----------
    declaration
        The declaration the value inhabits.
    index_types
        The types instantiating the indices of the declaration.
    predicates
        One predicate per index.
    value
        The value, enumerated by ``enumerator``.
    enumerator
        An enumerator over the Henry Ford encoded environment.
    """

    names = [f"_{index}" for index in range(declaration.arity)]

    instance = TData(declaration.name, tuple(TVar(name) for name in names))

    return LeafOracle(enumerator).holds(
        instance,
        value,
        dict(zip(names, index_types)),
        dict(zip(names, predicates)),
    )
