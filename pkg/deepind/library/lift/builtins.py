"""The fixed predicate liftings of the builtin type formers."""
from typing import Dict

from deepind.library.core.declarations import EQUAL
from deepind.library.core.terms import (
    Arr,
    Clause,
    EqualT,
    LiftingDef,
    PCon,
    Pi,
    Prod,
    PTt,
    PTuple,
    PVar,
    SetSort,
    SumT,
    TopT,
    Var,
    apply,
    telescope,
)
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError

BUILTIN_ALIASES = {"Arrow": "Arr"}

BUILTIN_LIFTINGS = ("Equal", "Pair", "Sum", "Arr", "Unit", "KTop")
"""The names of the builtin liftings, as referenced by ``LiftRef`` terms."""


def _predicate(carrier: str) -> Arr:
    return Arr(Var(carrier), SetSort())


def _binary_signature(carrier: Arr) -> Pi:
    """``forall (A B : Set) -> (A -> Set) -> (B -> Set) -> carrier -> Set``"""

    return telescope(
        [("A", SetSort()), ("B", SetSort())],
        Arr(_predicate("A"), Arr(_predicate("B"), Arr(carrier, SetSort()))),
    )


def _equal_lifting() -> LiftingDef:

    a, q, q_prime = Var("a"), Var("Q"), Var("Q'")

    body = Pi("a", Var("A"), EqualT(apply(q, a), apply(q_prime, a)))

    return LiftingDef(
        "Equal^",
        _binary_signature(EqualT(Var("A"), Var("B"))),
        (
            Clause(
                (PVar("A"), PVar("A"), PVar("Q"), PVar("Q'"), PCon("refl")),
                body,
            ),
        ),
        EQUAL,
    )


def _pair_lifting() -> LiftingDef:

    q_a, q_b = Var("Q_A"), Var("Q_B")

    return LiftingDef(
        "Pair^",
        _binary_signature(Prod(Var("A"), Var("B"))),
        (
            Clause(
                (
                    PVar("A"),
                    PVar("B"),
                    PVar("Q_A"),
                    PVar("Q_B"),
                    PTuple((PVar("a"), PVar("b"))),
                ),
                Prod(apply(q_a, Var("a")), apply(q_b, Var("b"))),
            ),
        ),
        "Pair",
    )


def _sum_lifting() -> LiftingDef:

    prefix = (PVar("A"), PVar("B"), PVar("Q_A"), PVar("Q_B"))

    return LiftingDef(
        "Sum^",
        _binary_signature(SumT(Var("A"), Var("B"))),
        (
            Clause(
                (*prefix, PCon("inl", (PVar("a"),))), apply(Var("Q_A"), Var("a"))
            ),
            Clause(
                (*prefix, PCon("inr", (PVar("b"),))), apply(Var("Q_B"), Var("b"))
            ),
        ),
        "Sum",
    )


def _arrow_lifting() -> LiftingDef:

    a = Var("a")

    body = Pi(
        "a",
        Var("A"),
        Arr(apply(Var("Q_A"), a), apply(Var("Q_B"), apply(Var("f"), a))),
    )

    return LiftingDef(
        "Arr^",
        _binary_signature(Arr(Var("A"), Var("B"))),
        (
            Clause(
                (PVar("A"), PVar("B"), PVar("Q_A"), PVar("Q_B"), PVar("f")),
                body,
            ),
        ),
        "Arr",
    )


def _unit_lifting() -> LiftingDef:
    return LiftingDef(
        "Unit^", Arr(TopT(), SetSort()), (Clause((PTt(),), TopT()),), "Unit"
    )


def _top_lifting() -> LiftingDef:
    """The constantly true predicate ``KTop A a = Top``."""

    return LiftingDef(
        "KTop",
        Pi("A", SetSort(), _predicate("A")),
        (Clause((PVar("A"), PVar("a")), TopT()),),
        "KTop",
    )


_FACTORIES = {
    "Equal": _equal_lifting,
    "Pair": _pair_lifting,
    "Sum": _sum_lifting,
    "Arr": _arrow_lifting,
    "Unit": _unit_lifting,
    "KTop": _top_lifting,
}

_CACHE: Dict[str, LiftingDef] = {}


def is_builtin_lifting(name: str) -> bool:
    return BUILTIN_ALIASES.get(name, name) in _FACTORIES


def builtin_lifting(name: str) -> LiftingDef:
    """Returns the fixed lifting of one of the builtin type formers ``Equal``,
    ``Pair``, ``Sum``, ``Arrow`` (or ``Arr``), ``Unit`` and ``KTop``.

    Raises
    ------
    DiagnosticError
        With an UNKNOWN_BUILTIN diagnostic for any other name.
    """

    name = BUILTIN_ALIASES.get(name, name)

    if name not in _FACTORIES:

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.UNKNOWN_BUILTIN,
                    f"{name} is not a builtin type former; expected one of "
                    + ", ".join(BUILTIN_LIFTINGS),
                )
            ]
        )

    if name not in _CACHE:
        _CACHE[name] = _FACTORIES[name]()

    return _CACHE[name]

