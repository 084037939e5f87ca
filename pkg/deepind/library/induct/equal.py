"""The induction artifacts of the builtin ``Equal`` type, whose single
constructor ``refl`` is matched on directly rather than encoded."""
from deepind.library.core.declarations import EQUAL
from deepind.library.core.naming import (
    hypothesis_name,
    kt_name,
    structural_hypothesis_name,
)
from deepind.library.core.terms import (
    Arr,
    Clause,
    CtorRef,
    EqualT,
    FunctionDef,
    HypCall,
    Hypothesis,
    KTop,
    Lam,
    LiftRef,
    PCon,
    PVar,
    SetSort,
    Term,
    Var,
    apply,
    telescope,
)

REFL = "refl"


def _refl_premise(carrier: Term, source: Term, target: Term) -> Term:
    return apply(LiftRef(EQUAL), carrier, carrier, source, target, CtorRef(REFL))


def equal_hypothesis(predicate: str, predicate_type: Term) -> Hypothesis:
    """``\\P -> forall (C : Set) (Q Q' : C -> Set) -> Equal^ C C Q Q' refl ->
    P C C Q Q' refl``"""

    carrier, source, target = Var("C"), Var("Q"), Var("Q'")

    body = telescope(
        [
            ("C", SetSort()),
            ("Q", Arr(carrier, SetSort())),
            ("Q'", Arr(carrier, SetSort())),
        ],
        Arr(
            _refl_premise(carrier, source, target),
            apply(Var(predicate), carrier, carrier, source, target, CtorRef(REFL)),
        ),
    )

    return Hypothesis(hypothesis_name(REFL), Lam(predicate, body, predicate_type))


def equal_structural_hypothesis(predicate: str, predicate_type: Term) -> Hypothesis:
    """``\\P -> forall (C : Set) -> P C C refl``"""

    carrier = Var("C")

    body = telescope(
        [("C", SetSort())], apply(Var(predicate), carrier, carrier, CtorRef(REFL))
    )

    return Hypothesis(
        structural_hypothesis_name(REFL), Lam(predicate, body, predicate_type)
    )


def equal_witness_clause(predicate: str, case_parameter: str) -> Clause:
    """``dIndEqual P crefl A A Q Q' refl liftE = crefl A Q Q' liftE``"""

    return Clause(
        (
            PVar(predicate),
            PVar(case_parameter),
            PVar("A"),
            PVar("A"),
            PVar("Q"),
            PVar("Q'"),
            PCon(REFL),
            PVar("liftE"),
        ),
        HypCall(Var(case_parameter), (Var("A"), Var("Q"), Var("Q'"), Var("liftE"))),
    )


def equal_kt() -> FunctionDef:
    """``Equal^KT A A refl = \\a -> refl``, the lifting of ``Equal`` at the
    constantly true predicates being inhabited by reflexivity alone."""

    a, b = Var("A"), Var("B")

    signature = telescope(
        [("A", SetSort()), ("B", SetSort()), ("e", EqualT(a, b))],
        apply(LiftRef(EQUAL), a, b, KTop(a), KTop(b), Var("e")),
    )

    return FunctionDef(
        kt_name(EQUAL),
        signature,
        (Clause((PVar("A"), PVar("A"), PCon(REFL)), Lam("a", CtorRef(REFL))),),
    )
