"""Liftings of type expressions and of constructor argument shapes."""
from typing import Callable, List, Mapping, Optional, Union

from deepind.library.core.naming import NameSupply
from deepind.library.core.shapes import (
    ArrowS,
    ConstS,
    NestedS,
    ProductS,
    RecS,
    ShapeF,
    SumS,
    TrulyNestedS,
)
from deepind.library.core.terms import (
    Arr,
    KTop,
    LiftRef,
    Pi,
    Term,
    Var,
    apply,
    type_to_term,
)
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TVar,
    TypeExpr,
)

RecursivePredicate = Callable[[List[Term], List[Term]], Term]
"""Builds the predicate used at a recursive position from the instantiated
index types and their predicates."""


def indexed(head: Term) -> RecursivePredicate:
    """``P types predicates``, as used by liftings and deep hypotheses."""
    return lambda types, predicates: apply(head, *types, *predicates)


def unindexed(head: Term) -> RecursivePredicate:
    """``P types``, as used by structural hypotheses."""
    return lambda types, predicates: apply(head, *types)


def constant(head: Term) -> RecursivePredicate:
    """``P``, as used by rules whose indices are fixed outside the predicate."""
    return lambda types, predicates: head


def _binary(name: str, left, right, left_lift: Term, right_lift: Term) -> Term:
    return apply(
        LiftRef(name), type_to_term(left), type_to_term(right), left_lift, right_lift
    )


def lift_type(type_expr: TypeExpr, predicates: Mapping[str, Term]) -> Term:
    """Lifts a type expression which does not mention the declared type, e.g.
    ``B * C`` -> ``Pair^ B C Q_B Q_C``.

    Variables are mapped to their predicate and closed nullary types to the
    constantly true predicate on them.
    """

    if isinstance(type_expr, TVar):
        return predicates[type_expr.name]

    if isinstance(type_expr, TUnit) or (
        isinstance(type_expr, TData) and len(type_expr.args) == 0
    ):
        return KTop(type_to_term(type_expr))

    if isinstance(type_expr, TProduct):
        return _binary(
            "Pair",
            type_expr.left,
            type_expr.right,
            lift_type(type_expr.left, predicates),
            lift_type(type_expr.right, predicates),
        )
    if isinstance(type_expr, TSum):
        return _binary(
            "Sum",
            type_expr.left,
            type_expr.right,
            lift_type(type_expr.left, predicates),
            lift_type(type_expr.right, predicates),
        )
    if isinstance(type_expr, TArrow):
        return _binary(
            "Arr",
            type_expr.domain,
            type_expr.codomain,
            lift_type(type_expr.domain, predicates),
            lift_type(type_expr.codomain, predicates),
        )

    assert isinstance(type_expr, TData)

    return apply(
        LiftRef(type_expr.name),
        *(type_to_term(arg) for arg in type_expr.args),
        *(lift_type(arg, predicates) for arg in type_expr.args),
    )


def derive_shape_lifting(
    shape: ShapeF,
    recursive: Union[Term, RecursivePredicate],
    predicates: Mapping[str, Term],
) -> Term:
    """Lifts a constructor argument shape to a predicate on it.

    Parameters
    ----------
    shape
        The grammar parse of the argument.
    recursive
        The predicate ``P`` used at recursive positions. A term is applied to
        the instantiated types followed by their lifted predicates.
    predicates
        The predicate of each binder in scope.
    """

    if isinstance(recursive, Term):
        recursive = indexed(recursive)

    if isinstance(shape, ConstS):
        return lift_type(shape.source, predicates)

    if isinstance(shape, RecS):
        return recursive(
            [type_to_term(arg) for arg in shape.args],
            [lift_type(arg, predicates) for arg in shape.args],
        )

    if isinstance(shape, TrulyNestedS):
        return recursive(
            [type_to_term(child.source) for child in shape.children],
            [
                derive_shape_lifting(child, recursive, predicates)
                for child in shape.children
            ],
        )

    if isinstance(shape, NestedS):
        return apply(
            LiftRef(shape.head),
            *(type_to_term(child.source) for child in shape.children),
            *(
                derive_shape_lifting(child, recursive, predicates)
                for child in shape.children
            ),
        )

    if isinstance(shape, (ProductS, SumS)):
        return _binary(
            "Pair" if isinstance(shape, ProductS) else "Sum",
            shape.left.source,
            shape.right.source,
            derive_shape_lifting(shape.left, recursive, predicates),
            derive_shape_lifting(shape.right, recursive, predicates),
        )

    if isinstance(shape, ArrowS):
        return _binary(
            "Arr",
            shape.domain,
            shape.codomain.source,
            lift_type(shape.domain, predicates),
            derive_shape_lifting(shape.codomain, recursive, predicates),
        )

    raise NotImplementedError()


def lifting_premise(
    shape: ShapeF,
    subject: Term,
    recursive: Union[Term, RecursivePredicate],
    predicates: Mapping[str, Term],
    supply: NameSupply,
) -> Optional[Term]:
    """The proposition that ``subject`` satisfies the lifting of its shape.

    Function arguments are unfolded into ``forall z -> D^ z -> C^ (x z)`` and
    ``None`` is returned when the lifting is the constantly true predicate.
    """

    if isinstance(shape, ArrowS):

        variable = supply.fresh("z")

        codomain = lifting_premise(
            shape.codomain,
            apply(subject, Var(variable)),
            recursive,
            predicates,
            supply,
        )

        if codomain is None:
            return None

        domain_predicate = lift_type(shape.domain, predicates)
        body = (
            codomain
            if isinstance(domain_predicate, KTop)
            else Arr(apply(domain_predicate, Var(variable)), codomain)
        )

        return Pi(variable, type_to_term(shape.domain), body)

    predicate = derive_shape_lifting(shape, recursive, predicates)

    if isinstance(predicate, KTop):
        return None

    return apply(predicate, subject)


def has_evidence(shape: ShapeF, predicates: Mapping[str, Term]) -> bool:
    """Whether ``lifting_premise`` produces a premise for the shape, i.e.
    whether lifting evidence is carried for an argument of this shape."""

    if isinstance(shape, ArrowS):
        return has_evidence(shape.codomain, predicates)
    if isinstance(shape, ConstS):
        return not isinstance(lift_type(shape.source, predicates), KTop)

    return True
