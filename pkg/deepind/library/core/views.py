from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from deepind.library.core.declarations import ConstructorDecl, DataDecl
from deepind.library.core.naming import NameSupply, argument_base_name, predicate_name
from deepind.library.core.shapes import ShapeF, shape_of
from deepind.library.core.terms import CtorRef, PCon, PVar, Term, Var, apply
from deepind.library.core.types import TypeExpr


@dataclass(frozen=True)
class ArgumentView:
    name: str
    type: TypeExpr
    shape: ShapeF


@dataclass(frozen=True)
class ConstructorView:
    """A Henry Ford encoded constructor together with the variable names used
    for it in every derived artifact."""

    constructor: ConstructorDecl

    return_variables: Tuple[str, ...]
    index_binders: Tuple[str, ...]

    constraints: Tuple[Tuple[str, TypeExpr], ...]
    constraint_names: Tuple[str, ...]

    arguments: Tuple[ArgumentView, ...]

    supply: NameSupply

    @property
    def name(self) -> str:
        return self.constructor.name

    @property
    def predicates(self) -> Dict[str, Term]:
        """Maps every binder to the variable holding its custom predicate."""
        return {
            name: Var(predicate_name(name))
            for name in (*self.return_variables, *self.index_binders)
        }

    @property
    def return_predicates(self) -> List[Term]:
        return [Var(predicate_name(name)) for name in self.return_variables]

    @property
    def index_predicates(self) -> List[str]:
        return [predicate_name(name) for name in self.index_binders]

    def _applied_names(self) -> List[str]:
        return [
            *self.index_binders,
            *self.constraint_names,
            *(argument.name for argument in self.arguments),
        ]

    def term(self) -> Term:
        """The constructor applied to its index binders, equality proofs and
        arguments, e.g. ``pair B C e s_B s_C``."""
        return apply(
            CtorRef(self.name), *(Var(name) for name in self._applied_names())
        )

    def pattern(self, constraint_patterns=None) -> PCon:

        constraint_patterns = (
            [PVar(name) for name in self.constraint_names]
            if constraint_patterns is None
            else constraint_patterns
        )

        return PCon(
            self.name,
            (
                *(PVar(name) for name in self.index_binders),
                *constraint_patterns,
                *(PVar(argument.name) for argument in self.arguments),
            ),
        )


def view_constructor(
    declaration: DataDecl,
    constructor: ConstructorDecl,
    environment,
    reserved: Iterable[str] = (),
) -> ConstructorView:
    """Builds the view of a Henry Ford encoded constructor, classifying each of
    its arguments and choosing variable names distinct from ``reserved``."""

    allow_nesting = declaration.classification is not None and (
        declaration.classification.is_truly_nested
    )

    supply = NameSupply(
        [
            *reserved,
            *constructor.binder_names,
            *(predicate_name(name) for name in constructor.binder_names),
            *(item.name for item in declaration.constructors),
        ]
    )

    constraints = tuple(constructor.constraints)

    constraint_names = tuple(
        supply.fresh("e" if len(constraints) == 1 else f"e_{variable}")
        for variable, _ in constraints
    )

    arguments = tuple(
        ArgumentView(
            supply.fresh(argument_base_name(argument)),
            argument,
            shape_of(argument, declaration.name, environment, allow_nesting),
        )
        for argument in constructor.arguments
    )

    return ConstructorView(
        constructor,
        tuple(constructor.return_variables),
        tuple(constructor.index_binders),
        constraints,
        constraint_names,
        arguments,
        supply,
    )
