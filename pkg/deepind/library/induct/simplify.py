"""Recovers a structural induction rule from a deep one by instantiating every
custom predicate with the constantly true predicate and erasing the premises
which become trivial."""
from typing import FrozenSet, List, Tuple

from deepind.library.core.naming import structural_rule_name, witness_name
from deepind.library.core.terms import (
    App,
    Arr,
    KTop,
    Pi,
    RuleDef,
    RuleKind,
    SetSort,
    Term,
    Var,
    free_variables,
    map_children,
    substitute,
)


def _is_predicate_type(term: Term) -> bool:
    """Whether ``term`` is of the form ``X -> Set``."""
    return isinstance(term, Arr) and isinstance(term.codomain, SetSort)


def _instantiate_predicates(term: Term) -> Term:
    """Removes every ``forall (Q : X -> Set)`` binder, replacing ``Q`` by the
    constantly true predicate on ``X``."""

    if isinstance(term, Pi) and _is_predicate_type(term.domain):

        body = substitute(term.body, {term.binder: KTop(term.domain.domain)})
        return _instantiate_predicates(body)

    return map_children(term, _instantiate_predicates)


def _predicate_positions(predicate_type: Term) -> Tuple[Term, FrozenSet[int]]:
    """Drops the predicate arguments from the type of the rule predicate,
    returning the new type and the positions of the dropped arguments."""

    steps: List[Term] = []
    positions = set()

    body = predicate_type

    while isinstance(body, (Pi, Arr)):

        if isinstance(body, Arr) and _is_predicate_type(body.domain):
            positions.add(len(steps))

        steps.append(body)
        body = body.body if isinstance(body, Pi) else body.codomain

    for index in reversed(range(len(steps))):

        if index in positions:
            continue

        step = steps[index]
        body = (
            Pi(step.binder, step.domain, body)
            if isinstance(step, Pi)
            else Arr(step.domain, body)
        )

    return body, frozenset(positions)


def _drop_positions(term: Term, predicate: str, positions: FrozenSet[int]) -> Term:

    term = map_children(
        term, lambda child: _drop_positions(child, predicate, positions)
    )

    if isinstance(term, App) and term.head == Var(predicate):

        args = tuple(
            arg for index, arg in enumerate(term.args) if index not in positions
        )
        return App(term.head, args) if len(args) > 0 else term.head

    return term


def _erase_trivial_premises(term: Term, predicate: str, depth: int) -> Term:
    """Erases the premises not mentioning ``predicate`` from the statement
    (``depth`` 0) and from the hypotheses it assumes (``depth`` 1)."""

    if isinstance(term, Pi):
        return Pi(
            term.binder,
            term.domain,
            _erase_trivial_premises(term.body, predicate, depth),
        )

    if isinstance(term, Arr):

        codomain = _erase_trivial_premises(term.codomain, predicate, depth)

        if predicate not in free_variables(term.domain):
            return codomain

        domain = (
            _erase_trivial_premises(term.domain, predicate, depth + 1)
            if depth == 0
            else term.domain
        )

        return Arr(domain, codomain)

    return term


def _erase_true_premises(term: Term) -> Term:
    """Rewrites ``K_T X x -> body`` to ``body``."""

    term = map_children(term, _erase_true_premises)

    if (
        isinstance(term, Arr)
        and isinstance(term.domain, App)
        and isinstance(term.domain.head, KTop)
    ):
        return term.codomain

    return term


def simplify_structural(rule: RuleDef) -> RuleDef:
    """Specializes a (polymorphic) deep induction rule to its structural
    counterpart.

    Every custom predicate is instantiated with the constantly true predicate,
    the predicate arguments of the rule predicate are removed, the premises of
    the statement and of its hypotheses which no longer mention the rule
    predicate are erased, as are premises of the form ``K_T X x``.

    Named hypotheses are inlined first, so that the result can be compared with
    the expanded output of ``derive_structural_rule``.
    """

    statement = rule.expanded().statement

    assert isinstance(statement, Pi), "the statement must quantify a predicate"

    predicate = statement.binder
    predicate_type, positions = _predicate_positions(statement.domain)

    body = _instantiate_predicates(statement.body)
    body = _drop_positions(body, predicate, positions)
    body = _erase_trivial_premises(body, predicate, 0)
    body = _erase_true_premises(body)

    declaration = (
        rule.name[len(witness_name("")) :]
        if rule.name.startswith(witness_name(""))
        else rule.name
    )

    return RuleDef(
        structural_rule_name(declaration),
        RuleKind.STRUCTURAL,
        Pi(predicate, predicate_type, body),
        (),
    )
