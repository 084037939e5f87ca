"""Map functions of the liftings of non-GADT type constructors, turning
morphisms of predicates into morphisms of lifted predicates."""
import logging
from typing import Dict, List, Optional

from deepind.library.core.declarations import DataDecl, index_names
from deepind.library.core.naming import lift_map_name, predicate_name
from deepind.library.core.shapes import (
    ArrowS,
    ConstS,
    NestedS,
    ProductS,
    RecS,
    ShapeF,
    SumS,
)
from deepind.library.core.terms import (
    Arr,
    Clause,
    FunctionDef,
    LiftRef,
    MapCall,
    PredMapT,
    PVar,
    SelfCall,
    SetSort,
    Term,
    Var,
    apply,
    arrows,
    data_type,
    subterms,
    telescope,
    tuple_pattern,
    tuple_term,
    type_to_term,
)
from deepind.library.core.types import (
    TArrow,
    TData,
    TProduct,
    TSum,
    TVar,
    TypeExpr,
    free_variables,
)
from deepind.library.core.views import ConstructorView
from deepind.library.lift.liftings import declaration_views
from deepind.library.lift.morphisms import Morphism, MorphismBuilder
from deepind.library.lift.shapes import derive_shape_lifting, has_evidence, lift_type
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)


def _unsupported(name: str, message: str, span=None) -> DiagnosticError:

    return DiagnosticError(
        [
            make_diagnostic(
                DiagnosticCode.UNSUPPORTED_MAP,
                message,
                span,
                declaration=name,
            )
        ]
    )


def map_predicate_names(arity: int) -> Dict[str, List[str]]:
    """The names of the source and target predicates and of the morphisms
    between them, e.g. ``Q``, ``Q'`` and ``m`` for a unary type."""

    if arity == 1:
        return {"source": ["Q"], "target": ["Q'"], "morphism": ["m"]}

    indices = index_names(arity)

    return {
        "source": [f"Q_{index}" for index in indices],
        "target": [f"Q'_{index}" for index in indices],
        "morphism": [f"m_{index}" for index in indices],
    }


def is_mappable(declaration: DataDecl) -> bool:
    """Whether the lifting of a declaration has a map function."""

    return not (
        declaration.is_equal
        or declaration.arity == 0
        or declaration.classification.is_gadt
        or declaration.classification.is_truly_nested
    )


def ensure_mappable(declaration: DataDecl, span=None):

    if declaration.is_equal or (
        declaration.classification is not None and declaration.classification.is_gadt
    ):

        raise _unsupported(
            declaration.name,
            f"the lifting of the GADT {declaration.name} has no map function: a "
            f"morphism of predicates does not preserve the equality of liftings",
            span,
        )

    if declaration.classification.is_truly_nested:

        raise _unsupported(
            declaration.name,
            f"the lifting of the truly nested type {declaration.name} has no "
            f"derivable map function",
            span,
        )

    if declaration.arity == 0:

        raise _unsupported(
            declaration.name, f"{declaration.name} has no indices to map over", span
        )


def lift_map_signature(name: str, arity: int) -> Term:
    """``forall (A : Set) (Q Q' : A -> Set) -> PredMap A Q Q' ->
    PredMap (H A) (H^ A Q) (H^ A Q')``"""

    indices = index_names(arity)
    names = map_predicate_names(arity)

    binders = [(index, SetSort()) for index in indices]

    for index, source, target in zip(indices, names["source"], names["target"]):

        binders.append((source, _predicate(index)))
        binders.append((target, _predicate(index)))

    premises = [
        PredMapT(Var(index), Var(source), Var(target))
        for index, source, target in zip(indices, names["source"], names["target"])
    ]

    carrier = data_type(name, *(Var(index) for index in indices))

    conclusion = PredMapT(
        carrier,
        apply(LiftRef(name), *(Var(i) for i in indices), *map(Var, names["source"])),
        apply(LiftRef(name), *(Var(i) for i in indices), *map(Var, names["target"])),
    )

    return telescope(binders, arrows(premises, conclusion))


def _predicate(index: str) -> Term:
    return Arr(Var(index), SetSort())


class _MapBuilder(MorphismBuilder):
    """Builds the mapped evidence of a single constructor clause."""

    def __init__(self, declaration: DataDecl, view: ConstructorView, environment):

        names = map_predicate_names(declaration.arity)

        source = dict(view.predicates)

        for variable, name in zip(view.return_variables, names["source"]):
            source[variable] = Var(name)

        super(_MapBuilder, self).__init__(view, source)

        self.declaration = declaration
        self.environment = environment

        self.target = dict(view.predicates)
        self.morphisms = {}

        for variable, target, morphism in zip(
            view.return_variables, names["target"], names["morphism"]
        ):
            self.target[variable] = Var(target)
            self.morphisms[variable] = Var(morphism)

    @property
    def source(self):
        return self.predicates

    def _map_call(self, head: str, types, sources, targets, morphisms, recursive):

        call_type = SelfCall if recursive else MapCall

        return lambda subject, evidence: call_type(
            lift_map_name(head),
            (
                *types,
                *sources,
                *targets,
                *(self.reify(morphism) for morphism in morphisms),
            ),
            subject,
            evidence,
        )

    def _ensure_covariant(self, domain: TypeExpr, span):

        if any(name in self.morphisms for name in free_variables(domain)):

            raise _unsupported(
                self.declaration.name,
                f"an index of {self.declaration.name} occurs in the domain of a "
                f"function type, where predicate morphisms cannot be applied",
                span,
            )

    def type_morphism(self, type_expr: TypeExpr) -> Optional[Morphism]:

        if isinstance(type_expr, TVar):

            morphism = self.morphisms.get(type_expr.name)

            if morphism is None:
                return None

            return lambda subject, evidence: apply(morphism, subject, evidence)

        if isinstance(type_expr, TProduct):
            return self.pair(
                self.type_morphism(type_expr.left), self.type_morphism(type_expr.right)
            )
        if isinstance(type_expr, TSum):
            return self.sum(
                self.type_morphism(type_expr.left), self.type_morphism(type_expr.right)
            )
        if isinstance(type_expr, TArrow):

            self._ensure_covariant(type_expr.domain, type_expr.span)
            return self.arrow(type_expr.domain, self.type_morphism(type_expr.codomain))

        if not isinstance(type_expr, TData) or len(type_expr.args) == 0:
            return None

        morphisms = [self.type_morphism(arg) for arg in type_expr.args]

        if all(morphism is None for morphism in morphisms):
            return None

        ensure_mappable(self.environment[type_expr.name], type_expr.span)

        return self._map_call(
            type_expr.name,
            [type_to_term(arg) for arg in type_expr.args],
            [lift_type(arg, self.source) for arg in type_expr.args],
            [lift_type(arg, self.target) for arg in type_expr.args],
            morphisms,
            recursive=False,
        )

    def shape_morphism(self, shape: ShapeF) -> Optional[Morphism]:

        recursive = LiftRef(self.declaration.name)

        if isinstance(shape, ConstS):
            return self.type_morphism(shape.source)

        if isinstance(shape, RecS):

            return self._map_call(
                self.declaration.name,
                [type_to_term(arg) for arg in shape.args],
                [lift_type(arg, self.source) for arg in shape.args],
                [lift_type(arg, self.target) for arg in shape.args],
                [self.type_morphism(arg) for arg in shape.args],
                recursive=True,
            )

        if isinstance(shape, NestedS):

            ensure_mappable(self.environment[shape.head], shape.source.span)

            return self._map_call(
                shape.head,
                [type_to_term(child.source) for child in shape.children],
                [
                    derive_shape_lifting(child, recursive, self.source)
                    for child in shape.children
                ],
                [
                    derive_shape_lifting(child, recursive, self.target)
                    for child in shape.children
                ],
                [self.shape_morphism(child) for child in shape.children],
                recursive=False,
            )

        if isinstance(shape, ArrowS):
            self._ensure_covariant(shape.domain, shape.source.span)

        if isinstance(shape, (ProductS, SumS, ArrowS)):
            return super(_MapBuilder, self).shape_morphism(shape)

        raise _unsupported(
            self.declaration.name,
            f"{self.declaration.name} is truly nested and has no derivable map "
            f"function",
            shape.source.span,
        )


def _map_clause(declaration: DataDecl, view: ConstructorView, environment) -> Clause:

    builder = _MapBuilder(declaration, view, environment)
    names = map_predicate_names(declaration.arity)

    evidence_patterns, components = [], []

    for binder in view.index_binders:

        evidence_patterns.append(PVar(predicate_name(binder)))
        components.append(Var(predicate_name(binder)))

    for argument in view.arguments:

        if not has_evidence(argument.shape, builder.source):
            continue

        evidence = view.supply.fresh(f"lift_{argument.name}")
        morphism = builder.shape_morphism(argument.shape)

        evidence_patterns.append(PVar(evidence))
        components.append(
            Var(evidence)
            if morphism is None
            else morphism(Var(argument.name), Var(evidence))
        )

    patterns = (
        *(PVar(name) for name in view.return_variables),
        *(
            PVar(name)
            for pair in zip(names["source"], names["target"])
            for name in pair
        ),
        *(PVar(name) for name in names["morphism"]),
        view.pattern(),
        tuple_pattern(evidence_patterns),
    )

    return Clause(patterns, tuple_term(components))


def derive_lift_map(declaration: DataDecl, environment) -> FunctionDef:
    """Derives ``lift{H}Map``, the map function of the lifting of a non-GADT
    type constructor ``H``, by structural recursion on the shape of each of its
    constructor arguments.

    Raises
    ------
    DiagnosticError
        With an UNSUPPORTED_MAP diagnostic for GADTs, truly nested types and
        types whose indices occur in the domain of a function type.
    """

    ensure_mappable(declaration, declaration.span)

    logger.debug(f"deriving the lifting map of {declaration.name}")

    names = map_predicate_names(declaration.arity)
    reserved = [
        lift_map_name(declaration.name),
        *(name for group in names.values() for name in group),
    ]

    clauses = tuple(
        _map_clause(declaration, view, environment)
        for view in declaration_views(declaration, environment, reserved)
    )

    return FunctionDef(
        lift_map_name(declaration.name),
        lift_map_signature(declaration.name, declaration.arity),
        clauses,
    )


def referenced_maps(terms) -> List[str]:
    """The distinct names of the lifting maps called from ``terms``, in order of
    first reference."""

    names = []

    for term in terms:
        for node in subterms(term):

            if isinstance(node, MapCall) and node.function not in names:
                names.append(node.function)

    return names
