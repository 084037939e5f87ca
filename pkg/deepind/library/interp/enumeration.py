"""Enumeration of the inhabitants of types in a finite model.

Type variables which are left free in an enumerated type are interpreted as
carriers of atoms. The index binders of a constructor are solved by matching
its return indices, and then its ``Equal`` arguments, against the requested
instance; binders which remain unsolved range over a finite universe of types.
An ``Equal T U`` proof exists exactly when ``T`` and ``U`` are the same type.
"""
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from deepind.library.core.declarations import (
    EQUAL,
    Classification,
    ConstructorDecl,
    DataDecl,
)
from deepind.library.core.environment import Environment
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TVar,
    TypeExpr,
    free_variables,
    substitute,
    walk,
)
from deepind.library.encode import henry_ford
from deepind.library.interp.model import FinModel
from deepind.library.interp.values import (
    REFL,
    UNIT,
    Atom,
    Con,
    FunctionValue,
    PairValue,
    Value,
)
from deepind.library.utilities.exceptions import CapExceededError

logger = logging.getLogger(__name__)

Substitution = Dict[str, TypeExpr]


def match_type(
    pattern: TypeExpr,
    target: TypeExpr,
    variables: Set[str],
    substitution: Substitution,
) -> Optional[Substitution]:
    """Extends ``substitution`` so that it maps ``pattern`` onto ``target``,
    treating only the names in ``variables`` as pattern variables. Returns
    ``None`` if no such extension exists."""

    if isinstance(pattern, TVar) and pattern.name in variables:

        bound = substitution.get(pattern.name)

        if bound is None:
            return {**substitution, pattern.name: target}

        return substitution if bound == target else None

    if type(pattern) != type(target):
        return None

    if isinstance(pattern, TVar):
        return substitution if pattern.name == target.name else None
    if isinstance(pattern, TUnit):
        return substitution

    if isinstance(pattern, TData):

        if pattern.name != target.name or len(pattern.args) != len(target.args):
            return None

        pairs = zip(pattern.args, target.args)

    elif isinstance(pattern, (TProduct, TSum)):
        pairs = [(pattern.left, target.left), (pattern.right, target.right)]
    elif isinstance(pattern, TArrow):
        pairs = [
            (pattern.domain, target.domain),
            (pattern.codomain, target.codomain),
        ]
    else:
        raise NotImplementedError()

    for item, target_item in pairs:

        substitution = match_type(item, target_item, variables, substitution)

        if substitution is None:
            return None

    return substitution


def type_universe(type_expr: TypeExpr, environment) -> Tuple[TypeExpr, ...]:
    """The types over which otherwise unconstrained binders range while
    enumerating ``type_expr``: its distinct sub-expressions which mention no
    declared data type."""

    universe = []

    for node in walk(type_expr):

        if node in universe or any(
            isinstance(item, TData) and environment.get(item.name) is not None
            for item in walk(node)
        ):
            continue

        universe.append(node)

    return tuple(universe)


def encoded_environment(environment: Environment) -> Environment:
    """Replaces every declaration of an environment by its Henry Ford
    encoding. Truly nested GADTs, which have none, are kept as they are."""

    return Environment(
        [
            declaration
            if declaration.classification == Classification.TRULY_NESTED_GADT
            else henry_ford(declaration)
            for declaration in environment
        ],
        environment.module_names,
    )


class Enumerator:
    """Enumerates, and caches, the values of types in a finite model."""

    def __init__(
        self,
        environment: Environment,
        model: FinModel,
        universe: Sequence[TypeExpr] = (),
    ):

        self.environment = environment
        self.model = model
        self.universe = tuple(universe)

        self._cache: Dict[Tuple[TypeExpr, int], Tuple[Value, ...]] = {}

    def _unsolved(self, constructor: ConstructorDecl, substitution) -> List[str]:
        return [
            name for name in constructor.binder_names if name not in substitution
        ]

    def instantiations(
        self, constructor: ConstructorDecl, targets: Sequence[TypeExpr]
    ) -> List[Substitution]:
        """The assignments of types to the binders of a constructor under which
        it returns the instance ``targets``."""

        binders = set(constructor.binder_names)
        substitution: Optional[Substitution] = {}

        for index, target in zip(constructor.indices, targets):

            substitution = match_type(index, target, binders, substitution)

            if substitution is None:
                return []

        equalities = [
            argument.args
            for argument in constructor.domain
            if isinstance(argument, TData) and argument.name == EQUAL
        ]

        progress = True

        while progress:

            progress = False

            for sides in equalities:
                for pattern, target in (sides, reversed(sides)):

                    pattern_open = any(
                        name in binders and name not in substitution
                        for name in free_variables(pattern)
                    )
                    target_closed = all(
                        name not in binders or name in substitution
                        for name in free_variables(target)
                    )

                    if not (pattern_open and target_closed):
                        continue

                    substitution = match_type(
                        pattern,
                        substitute(target, substitution),
                        binders,
                        substitution,
                    )

                    if substitution is None:
                        return []

                    progress = True

        unsolved = self._unsolved(constructor, substitution)

        return [
            {**substitution, **dict(zip(unsolved, choice))}
            for choice in itertools.product(self.universe, repeat=len(unsolved))
        ]

    def _data(self, declaration: DataDecl, targets, depth: int) -> List[Value]:

        values = []

        for constructor in declaration.constructors:
            for substitution in self.instantiations(constructor, targets):

                types = tuple(
                    substitution[name] for name in constructor.index_binders
                )
                domain = [
                    substitute(argument, substitution)
                    for argument in constructor.domain
                ]

                values.extend(
                    Con(constructor.name, types, arguments)
                    for arguments in itertools.product(
                        *(self.values(argument, depth - 1) for argument in domain)
                    )
                )

        return values

    def _functions(self, type_expr: TArrow, depth: int) -> List[Value]:

        # Graphs are total over the full depth carrier of the domain.
        domain = self.values(type_expr.domain, self.model.depth)
        codomain = self.values(type_expr.codomain, depth)

        count = len(codomain) ** len(domain)

        if count > self.model.function_cap:
            raise CapExceededError("function space", count, self.model.function_cap)

        return [
            FunctionValue(tuple(zip(domain, images)))
            for images in itertools.product(codomain, repeat=len(domain))
        ]

    def _enumerate(self, type_expr: TypeExpr, depth: int) -> List[Value]:

        if isinstance(type_expr, TVar):
            return [
                Atom(type_expr.name, index)
                for index in range(self.model.carrier_size)
            ]

        if isinstance(type_expr, TUnit):
            return [UNIT]

        if isinstance(type_expr, TProduct):
            return [
                PairValue(left, right)
                for left in self.values(type_expr.left, depth)
                for right in self.values(type_expr.right, depth)
            ]

        if isinstance(type_expr, TSum):
            left = self.values(type_expr.left, depth)
            right = self.values(type_expr.right, depth)

            return [
                *(Con("inl", (), (value,)) for value in left),
                *(Con("inr", (), (value,)) for value in right),
            ]

        if isinstance(type_expr, TArrow):
            return self._functions(type_expr, depth)

        assert isinstance(type_expr, TData)

        if type_expr.name == "Bool":
            return [Atom("Bool", index) for index in range(2)]
        if type_expr.name == "String":
            return [
                Atom("String", index) for index in range(self.model.string_atoms)
            ]

        declaration = self.environment.get(type_expr.name)

        if declaration is None or declaration.is_equal:

            left, right = type_expr.args
            return [REFL] if left == right else []

        if depth == 0:
            return []

        return self._data(declaration, type_expr.args, depth)

    def values(
        self, type_expr: TypeExpr, depth: Optional[int] = None
    ) -> Tuple[Value, ...]:
        """The values of a type with at most ``depth`` nested constructors,
        by default the depth of the model.

        Raises
        ------
        CapExceededError
            If a function space larger than the cap of the model is needed.
        """

        depth = self.model.depth if depth is None else depth
        key = (type_expr, depth)

        if key not in self._cache:
            self._cache[key] = tuple(self._enumerate(type_expr, depth))

        return self._cache[key]


def enumerate_values(
    type_expr: TypeExpr,
    environment: Environment,
    model: Optional[FinModel] = None,
) -> Tuple[Value, ...]:
    """Enumerates the inhabitants of a type up to the depth of ``model``.

    Free type variables are interpreted as carriers of ``model.carrier_size``
    atoms, e.g. ``Equal A A`` has the single inhabitant ``refl`` while
    ``Equal A B`` has none.

    Raises
    ------
    CapExceededError
        If a function space larger than the cap of the model is needed.
    """

    model = FinModel() if model is None else model

    values = Enumerator(
        environment, model, type_universe(type_expr, environment)
    ).values(type_expr)

    logger.debug(f"enumerated {len(values)} value(s)")

    return values
