"""Synthesis of the soundness witness ``dInd{G}`` of a deep induction rule."""
import logging
from typing import List, Optional

from deepind.library.core.declarations import Classification, DataDecl
from deepind.library.core.naming import (
    case_parameter_name,
    lift_map_name,
    predicate_name,
    witness_name,
)
from deepind.library.core.shapes import ConstS, NestedS, RecS, ShapeF
from deepind.library.core.terms import (
    Clause,
    FunctionDef,
    HypCall,
    LiftRef,
    MapCall,
    PVar,
    SelfCall,
    Var,
    tuple_pattern,
    type_to_term,
)
from deepind.library.core.views import ConstructorView
from deepind.library.induct.equal import REFL, equal_witness_clause
from deepind.library.induct.hypotheses import constructor_views, rule_predicate_name
from deepind.library.induct.rules import derive_deep_rule
from deepind.library.lift.maps import ensure_mappable
from deepind.library.lift.morphisms import Morphism, MorphismBuilder
from deepind.library.lift.shapes import derive_shape_lifting, has_evidence, lift_type
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)


class _WitnessBuilder(MorphismBuilder):
    """Builds the morphism ``p`` carrying the lifting of an argument at ``G^``
    to its lifting at the rule predicate ``P``."""

    def __init__(
        self,
        declaration: DataDecl,
        view: ConstructorView,
        environment,
        predicate: str,
        case_parameters: List[str],
    ):

        super(_WitnessBuilder, self).__init__(view, view.predicates)

        self.declaration = declaration
        self.environment = environment

        self.predicate = predicate
        self.case_parameters = case_parameters

    def _recursive_call(self, shape: RecS) -> Morphism:

        args = (
            Var(self.predicate),
            *map(Var, self.case_parameters),
            *(type_to_term(arg) for arg in shape.args),
            *(lift_type(arg, self.predicates) for arg in shape.args),
        )

        return lambda subject, evidence: SelfCall(
            witness_name(self.declaration.name), args, subject, evidence
        )

    def _nested_call(self, shape: NestedS) -> Morphism:

        ensure_mappable(self.environment[shape.head], shape.source.span)

        lifting, predicate = LiftRef(self.declaration.name), Var(self.predicate)

        args = (
            *(type_to_term(child.source) for child in shape.children),
            *(
                derive_shape_lifting(child, lifting, self.predicates)
                for child in shape.children
            ),
            *(
                derive_shape_lifting(child, predicate, self.predicates)
                for child in shape.children
            ),
            *(self.reify(self.shape_morphism(child)) for child in shape.children),
        )

        return lambda subject, evidence: MapCall(
            lift_map_name(shape.head), args, subject, evidence
        )

    def shape_morphism(self, shape: ShapeF) -> Optional[Morphism]:

        if isinstance(shape, ConstS):
            return None
        if isinstance(shape, RecS):
            return self._recursive_call(shape)
        if isinstance(shape, NestedS):
            return self._nested_call(shape)

        return super(_WitnessBuilder, self).shape_morphism(shape)


def _witness_clause(
    declaration: DataDecl,
    view: ConstructorView,
    environment,
    predicate: str,
    case_parameters: List[str],
    case_parameter: str,
) -> Clause:
    """``dIndG P cc A Q_A (c B e x) (Q_B, liftE, liftx) =
    cc A B Q_A Q_B e x liftE (p x liftx)``"""

    builder = _WitnessBuilder(
        declaration, view, environment, predicate, case_parameters
    )

    evidence_patterns = [PVar(predicate_name(name)) for name in view.index_binders]

    proofs = []

    for variable, _ in view.constraints:

        name = view.supply.fresh(
            "liftE" if len(view.constraints) == 1 else f"liftE_{variable}"
        )

        evidence_patterns.append(PVar(name))
        proofs.append(Var(name))

    for argument in view.arguments:

        if not has_evidence(argument.shape, view.predicates):
            continue

        name = view.supply.fresh(f"lift_{argument.name}")
        morphism = builder.shape_morphism(argument.shape)

        evidence_patterns.append(PVar(name))
        proofs.append(
            Var(name) if morphism is None else morphism(Var(argument.name), Var(name))
        )

    patterns = (
        PVar(predicate),
        *map(PVar, case_parameters),
        *map(PVar, view.return_variables),
        *(PVar(predicate_name(name)) for name in view.return_variables),
        view.pattern(),
        tuple_pattern(evidence_patterns),
    )

    body = HypCall(
        Var(case_parameter),
        (
            *map(Var, view.return_variables),
            *map(Var, view.index_binders),
            *view.return_predicates,
            *(Var(name) for name in view.index_predicates),
            *map(Var, view.constraint_names),
            *(Var(argument.name) for argument in view.arguments),
            *proofs,
        ),
    )

    return Clause(patterns, body)


def synth_witness(declaration: DataDecl, environment) -> FunctionDef:
    """Synthesizes ``dInd{G}``, the term proving the deep induction rule of a
    declaration sound.

    The clause of a constructor unpacks the lifting evidence of its argument
    and applies the matching hypothesis, carrying the evidence of each argument
    from ``G^`` to ``P`` by structural recursion on the shape of the argument:
    pairwise on products, by cases on sums, under the binder of functions, by a
    recursive call at recursive positions and through the map function of the
    lifting of ``H`` at nested positions.

    Raises
    ------
    DiagnosticError
        With a TRULY_NESTED_GADT diagnostic, a TRULY_NESTED_TYPE diagnostic (the
        witness of a truly nested type requires a functorial semantics), or an
        UNSUPPORTED_MAP diagnostic.
    """

    rule = derive_deep_rule(declaration, environment)

    predicate = rule_predicate_name(declaration)

    if declaration.is_equal:

        return FunctionDef(
            rule.name,
            rule.statement,
            (equal_witness_clause(predicate, case_parameter_name(REFL)),),
        )

    if declaration.classification == Classification.TRULY_NESTED_TYPE:

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.TRULY_NESTED_TYPE,
                    f"no soundness witness can be synthesized for the truly nested "
                    f"type {declaration.name}",
                    declaration.span,
                    explanation=(
                        f"Its deep induction rule is derivable but a witness needs "
                        f"a map function for the lifting of {declaration.name} "
                        f"itself, which only a functorial semantics provides."
                    ),
                    declaration=declaration.name,
                )
            ]
        )

    logger.debug(f"synthesizing the soundness witness of {declaration.name}")

    case_parameters = [
        case_parameter_name(constructor.name)
        for constructor in declaration.constructors
    ]

    views = constructor_views(declaration, environment, predicate, case_parameters)

    clauses = tuple(
        _witness_clause(
            declaration, view, environment, predicate, case_parameters, parameter
        )
        for view, parameter in zip(views, case_parameters)
    )

    return FunctionDef(rule.name, rule.statement, clauses)
