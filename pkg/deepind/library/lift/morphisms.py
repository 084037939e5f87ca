"""Combinators building morphisms between the liftings of constructor
arguments, shared by lifting maps and soundness witnesses."""
from dataclasses import replace
from typing import Callable, Mapping, Optional

from deepind.library.core.shapes import ArrowS, ProductS, ShapeF, SumS
from deepind.library.core.terms import (
    App,
    Case,
    CaseBranch,
    Fst,
    KTop,
    Lam,
    MapCall,
    PairI,
    SelfCall,
    Snd,
    Term,
    Var,
    apply,
    free_variables,
)
from deepind.library.core.types import TypeExpr
from deepind.library.core.views import ConstructorView
from deepind.library.lift.shapes import lift_type

Morphism = Callable[[Term, Term], Term]
"""Maps a subject and its evidence at the source predicate to evidence at the
target predicate."""


def _eta_reduce(term: Term, subject: str, evidence: str) -> Optional[Term]:
    """Returns ``f`` when ``term`` is ``f subject evidence``."""

    expected = (Var(subject), Var(evidence))

    if isinstance(term, (SelfCall, MapCall)):

        if (term.scrutinee, term.evidence) == expected:
            return replace(term, scrutinee=None, evidence=None)

    elif isinstance(term, App) and term.args[-2:] == expected:

        head = apply(term.head, *term.args[:-2])

        if not any(name in (subject, evidence) for name in free_variables(head)):
            return head

    return None


class MorphismBuilder:
    """Builds morphisms by structural recursion on argument shapes. A morphism
    of ``None`` stands for the identity."""

    def __init__(self, view: ConstructorView, predicates: Mapping[str, Term]):

        self.view = view
        self.predicates = predicates

    def fresh(self, base: str) -> str:
        return self.view.supply.fresh(base)

    def reify(self, morphism: Optional[Morphism]) -> Term:
        """Turns a morphism into a term, eta reducing ``\\w y -> f w y`` to
        ``f``."""

        subject, evidence = self.fresh("w"), self.fresh("y")

        if morphism is None:
            return Lam(subject, Lam(evidence, Var(evidence)))

        body = morphism(Var(subject), Var(evidence))
        reduced = _eta_reduce(body, subject, evidence)

        return Lam(subject, Lam(evidence, body)) if reduced is None else reduced

    def pair(
        self, left: Optional[Morphism], right: Optional[Morphism]
    ) -> Optional[Morphism]:

        if left is None and right is None:
            return None

        def component(morphism, projection):
            return lambda subject, evidence: (
                projection(evidence)
                if morphism is None
                else morphism(projection(subject), projection(evidence))
            )

        first, second = component(left, Fst), component(right, Snd)

        return lambda subject, evidence: PairI(
            (first(subject, evidence), second(subject, evidence))
        )

    def sum(
        self, left: Optional[Morphism], right: Optional[Morphism]
    ) -> Optional[Morphism]:

        if left is None and right is None:
            return None

        def branch(constructor, morphism):

            binder = self.fresh("v")

            return lambda evidence: CaseBranch(
                constructor,
                binder,
                evidence if morphism is None else morphism(Var(binder), evidence),
            )

        inl, inr = branch("inl", left), branch("inr", right)

        return lambda subject, evidence: Case(
            subject, (inl(evidence), inr(evidence))
        )

    def arrow(
        self, domain: TypeExpr, codomain: Optional[Morphism]
    ) -> Optional[Morphism]:
        """Post-composes the codomain morphism under the function binder."""

        if codomain is None:
            return None

        variable = self.fresh("z")

        if isinstance(lift_type(domain, self.predicates), KTop):

            return lambda subject, evidence: Lam(
                variable,
                codomain(
                    apply(subject, Var(variable)), apply(evidence, Var(variable))
                ),
            )

        witness = self.fresh("u")

        return lambda subject, evidence: Lam(
            variable,
            Lam(
                witness,
                codomain(
                    apply(subject, Var(variable)),
                    apply(evidence, Var(variable), Var(witness)),
                ),
            ),
        )

    def shape_morphism(self, shape: ShapeF) -> Optional[Morphism]:
        """Dispatches the structural shapes; subclasses handle the others."""

        if isinstance(shape, ProductS):
            return self.pair(
                self.shape_morphism(shape.left), self.shape_morphism(shape.right)
            )
        if isinstance(shape, SumS):
            return self.sum(
                self.shape_morphism(shape.left), self.shape_morphism(shape.right)
            )
        if isinstance(shape, ArrowS):
            return self.arrow(shape.domain, self.shape_morphism(shape.codomain))

        raise NotImplementedError()
