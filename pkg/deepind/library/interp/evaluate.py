"""Proof irrelevant evaluation of predicate liftings in a finite model.

Every proposition built by a lifting is evaluated to a boolean. Existentially
quantified predicates are decided by searching every table on the finite
carrier they range over, and ``Equal`` between two propositions is read as
the equality of their truth values.
"""
import logging
from typing import Any, Callable, Dict, Mapping, Optional, Sequence

from deepind.library.core.declarations import EQUAL
from deepind.library.core.terms import (
    App,
    Arr,
    DataRefT,
    EqualT,
    KTop,
    Lam,
    LiftingDef,
    LiftRef,
    Pattern,
    PCon,
    Pi,
    Prod,
    PTt,
    PTuple,
    PVar,
    SetSort,
    Sig,
    SumT,
    Term,
    TopT,
    Var,
    spine,
)
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TypeExpr,
)
from deepind.library.interp.enumeration import Enumerator, encoded_environment
from deepind.library.interp.model import FinModel
from deepind.library.interp.values import (
    UNIT,
    Con,
    PairValue,
    Predicate,
    Value,
    all_tables,
    always_true,
)
from deepind.library.lift import LiftingRegistry

logger = logging.getLogger(__name__)

Scope = Dict[str, Any]


class _NoMatch(Exception):
    """Raised when a clause pattern does not match its argument."""


def term_to_type(term: Term, scope: Mapping[str, Any]) -> TypeExpr:
    """Reads a term standing for a type back into a type expression, replacing
    the type variables bound in ``scope``."""

    if isinstance(term, Var):
        return scope[term.name]

    if isinstance(term, TopT):
        return TUnit()
    if isinstance(term, Prod):
        return TProduct(
            term_to_type(term.left, scope), term_to_type(term.right, scope)
        )
    if isinstance(term, SumT):
        return TSum(term_to_type(term.left, scope), term_to_type(term.right, scope))
    if isinstance(term, Arr):
        return TArrow(
            term_to_type(term.domain, scope), term_to_type(term.codomain, scope)
        )
    if isinstance(term, EqualT):
        return TData(
            EQUAL, (term_to_type(term.left, scope), term_to_type(term.right, scope))
        )

    head, args = spine(term)

    if isinstance(head, DataRefT):
        return TData(head.name, tuple(term_to_type(arg, scope) for arg in args))

    raise NotImplementedError(f"{term} does not denote a type")


def _is_predicate_type(term: Term) -> bool:
    return isinstance(term, Arr) and isinstance(term.codomain, SetSort)


class LiftingEvaluator:
    """Evaluates the liftings of a registry on enumerated values.

    Parameters
    ----------
    registry
        The liftings to evaluate, derived from the declarations as written.
    enumerator
        Enumerates the quantified carriers. Its environment must contain the
        Henry Ford encoded declarations so that enumerated values match the
        clause patterns of the liftings.
    """

    def __init__(self, registry: LiftingRegistry, enumerator: Enumerator):

        self.registry = registry
        self.enumerator = enumerator

    def _arity(self, lifting: LiftingDef) -> int:
        return (len(lifting.clauses[0].patterns) - 1) // 2

    def _match(self, pattern: Pattern, value: Value, scope: Scope):

        if isinstance(pattern, PVar):

            if pattern.name in scope and scope[pattern.name] != value:
                raise _NoMatch()

            scope[pattern.name] = value

        elif isinstance(pattern, PTt):

            if value != UNIT:
                raise _NoMatch()

        elif isinstance(pattern, PTuple):

            if not isinstance(value, PairValue):
                raise _NoMatch()

            rest = (
                pattern.items[1]
                if len(pattern.items) == 2
                else PTuple(pattern.items[1:])
            )

            self._match(pattern.items[0], value.left, scope)
            self._match(rest, value.right, scope)

        elif isinstance(pattern, PCon):

            if not isinstance(value, Con) or value.constructor != pattern.constructor:
                raise _NoMatch()

            arguments = (*value.types, *value.args)

            if len(arguments) != len(pattern.args):
                raise _NoMatch()

            for item, argument in zip(pattern.args, arguments):
                self._match(item, argument, scope)

        else:
            raise NotImplementedError()

    def holds(
        self,
        name: str,
        types: Sequence[TypeExpr],
        predicates: Sequence[Predicate],
        value: Value,
    ) -> bool:
        """Whether ``value`` satisfies the lifting ``name^`` taken at the index
        types ``types`` and their predicates ``predicates``.

        Raises
        ------
        CapExceededError
            If a quantified carrier or predicate table exceeds the caps of the
            model.
        """

        if name == "KTop":
            return True

        lifting = self.registry.lifting(name)

        for clause in lifting.clauses:

            scope: Scope = {}

            try:
                for pattern, argument in zip(
                    clause.patterns, (*types, *predicates, value)
                ):
                    self._match(pattern, argument, scope)
            except _NoMatch:
                continue

            return bool(self.evaluate(clause.body, scope))

        logger.debug(f"no clause of {lifting.name} matches {value}")
        return False

    def _lifted_predicate(self, name: str, args: Sequence[Any]) -> Predicate:

        count = len(args) // 2
        types, predicates = args[:count], args[count:]

        return lambda value: self.holds(name, types, predicates, value)

    def _apply(self, head: Term, args: Sequence[Term], scope: Scope) -> Any:

        if isinstance(head, LiftRef):

            if head.name == "KTop":
                return always_true if len(args) == 1 else True

            arity = self._arity(self.registry.lifting(head.name))

            types = [term_to_type(arg, scope) for arg in args[:arity]]
            rest = [self.evaluate(arg, scope) for arg in args[arity:]]

            if len(rest) == arity:
                return self._lifted_predicate(head.name, [*types, *rest])

            return self.holds(head.name, types, rest[:arity], rest[arity])

        function = self.evaluate(head, scope)

        for arg in args:
            function = function(self.evaluate(arg, scope))

        return function

    def _quantify(self, term, scope: Scope, combine: Callable) -> bool:

        if _is_predicate_type(term.domain):

            carrier = self.enumerator.values(
                term_to_type(term.domain.domain, scope)
            )
            candidates = all_tables(carrier, self.enumerator.model.table_cap)

        else:
            candidates = self.enumerator.values(term_to_type(term.domain, scope))

        return combine(
            self.evaluate(term.body, {**scope, term.binder: candidate})
            for candidate in candidates
        )

    def evaluate(self, term: Term, scope: Scope) -> Any:
        """Evaluates a term to a boolean when it is a proposition, to a
        predicate when it denotes one and to a value otherwise."""

        if isinstance(term, Var):
            return scope[term.name]

        if isinstance(term, TopT):
            return True
        if isinstance(term, KTop):
            return always_true

        if isinstance(term, Prod):
            return bool(self.evaluate(term.left, scope)) and bool(
                self.evaluate(term.right, scope)
            )
        if isinstance(term, Arr):
            return (not self.evaluate(term.domain, scope)) or bool(
                self.evaluate(term.codomain, scope)
            )
        if isinstance(term, EqualT):
            return bool(self.evaluate(term.left, scope)) == bool(
                self.evaluate(term.right, scope)
            )

        if isinstance(term, Pi):
            return self._quantify(term, scope, all)
        if isinstance(term, Sig):
            return self._quantify(term, scope, any)

        if isinstance(term, Lam):
            return lambda value: self.evaluate(
                term.body, {**scope, term.binder: value}
            )

        if isinstance(term, App):
            return self._apply(term.head, term.args, scope)

        if isinstance(term, LiftRef):
            return self._apply(term, (), scope)

        raise NotImplementedError(
            f"{type(term).__name__} terms cannot be evaluated"
        )


def eval_lifting(
    name: str,
    types: Sequence[TypeExpr],
    predicates: Sequence[Predicate],
    value: Value,
    registry: LiftingRegistry,
    enumerator: Optional[Enumerator] = None,
) -> bool:
    """Evaluates ``name^ types predicates value`` to a truth value.

    Parameters
    ----------
    name
        The name of a declaration, or of a builtin type former.
    types
        The types instantiating the indices of the declaration.
    predicates
        One predicate per index, e.g. a ``Table``.
    value
        A value enumerated from the Henry Ford encoded declaration.
    registry
        The registry deriving the liftings.
    enumerator
        The enumerator used for quantified carriers, by default one over the
        encoded environment of ``registry`` in the default model.

    Raises
    ------
    CapExceededError
        If a quantified carrier or predicate table exceeds the model caps.
    """

    if enumerator is None:
        enumerator = Enumerator(
            encoded_environment(registry.environment), FinModel()
        )

    evaluator = LiftingEvaluator(registry, enumerator)
    return evaluator.holds(name, list(types), list(predicates), value)


__all__ = [
    eval_lifting,
    LiftingEvaluator,
    term_to_type,
]
