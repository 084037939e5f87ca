"""Witnesses ``G^KT`` that every element satisfies the lifting of its type at
the constantly true predicates.

The lifting of a structured type at the constantly true predicates, e.g.
``Arr^ B C K_T K_T``, is isomorphic but not equal to the constantly true
predicate. Each such isomorphism is postulated as a lemma ``Equal^{...}KT``.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Set, Tuple

from deepind.library.core.declarations import (
    EQUAL,
    Classification,
    DataDecl,
    index_names,
)
from deepind.library.core.naming import (
    NameSupply,
    equal_map_name,
    kt_name,
    lift_map_name,
    postulate_name,
)
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
    Case,
    CaseBranch,
    Clause,
    CtorRef,
    EqualT,
    FunctionDef,
    FunctionRef,
    Fst,
    Hole,
    KTop,
    Lam,
    LiftRef,
    MapCall,
    PairI,
    PCon,
    Postulate,
    PostulateRef,
    PredMapT,
    PVar,
    SelfCall,
    SetSort,
    Snd,
    Term,
    Tt,
    Var,
    apply,
    arrows,
    data_type,
    telescope,
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
    skeleton_name,
    substitute,
)
from deepind.library.core.views import ConstructorView
from deepind.library.encode import henry_ford
from deepind.library.induct.equal import REFL, equal_kt
from deepind.library.induct.hypotheses import kt_predicates
from deepind.library.lift.liftings import declaration_views
from deepind.library.lift.maps import (
    derive_lift_map,
    ensure_mappable,
    map_predicate_names,
    referenced_maps,
)
from deepind.library.lift.obstruction import ensure_derivable
from deepind.library.lift.shapes import derive_shape_lifting, has_evidence, lift_type
from deepind.library.models.diagnostics import DiagnosticCode, make_diagnostic
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)

Evidence = Callable[[Term], Term]


@dataclass(frozen=True)
class KTWitness:
    """The ``G^KT`` function of a declaration, the lemmas it postulates, the
    skeleton of ``G^EqualMap`` when ``G^KT`` needs one and the functions of
    other declarations that ``G^KT`` calls, in order of definition."""

    function: FunctionDef
    postulates: Tuple[Postulate, ...]
    equal_map: Optional[FunctionDef] = None
    dependencies: Tuple[FunctionDef, ...] = ()


def _refl_proof(supply: NameSupply) -> Term:
    """``\\a -> refl``, the proof of ``Equal^ X X K_T K_T refl``."""
    return Lam(supply.fresh("a"), CtorRef(REFL))


class _Lemmas:
    """Postulates one lemma ``Equal^ A K K_T K^ e`` per distinct structured
    type ``K``, up to the renaming of its variables."""

    def __init__(self):

        self._names = NameSupply()
        self._postulates: Dict[TypeExpr, Postulate] = {}

    @property
    def postulates(self) -> Tuple[Postulate, ...]:
        return tuple(self._postulates.values())

    def _postulate(self, type_expr: TypeExpr) -> Tuple[str, List[str]]:

        variables = free_variables(type_expr)
        carrier, *names = index_names(len(variables) + 1)

        canonical = substitute(
            type_expr, {old: TVar(new) for old, new in zip(variables, names)}
        )

        if canonical not in self._postulates:

            index = type_to_term(canonical)

            signature = telescope(
                [
                    (carrier, SetSort()),
                    *((name, SetSort()) for name in names),
                    ("e", EqualT(Var(carrier), index)),
                ],
                apply(
                    LiftRef(EQUAL),
                    Var(carrier),
                    index,
                    KTop(Var(carrier)),
                    lift_type(canonical, {name: KTop(Var(name)) for name in names}),
                    Var("e"),
                ),
            )

            name = self._names.fresh(postulate_name(skeleton_name(canonical)))
            self._postulates[canonical] = Postulate(name, signature)

        return self._postulates[canonical].name, variables

    def constraint_proof(self, variable: str, index: TypeExpr, proof: str) -> Term:
        """Proves ``Equal^ X K K_T K^ e`` for the constraint ``e : Equal X K``."""

        name, variables = self._postulate(index)

        return apply(
            PostulateRef(name), Var(variable), *map(Var, variables), Var(proof)
        )

    def reflexive_proof(self, type_expr: TypeExpr) -> Term:
        """Proves ``Equal^ T T K_T T^ refl``."""

        name, variables = self._postulate(type_expr)

        return apply(
            PostulateRef(name),
            type_to_term(type_expr),
            *map(Var, variables),
            CtorRef(REFL),
        )


class _KTBuilder:
    """Builds the evidence that an argument satisfies its lifting at the
    constantly true predicates.

    Which components and binders the evidence has is decided by the lifting
    premises, i.e. by ``view.predicates``. Only the evidence itself is built
    at the constantly true predicates.
    """

    def __init__(
        self, declaration: DataDecl, view: ConstructorView, environment, lemmas
    ):

        self.declaration = declaration
        self.view = view
        self.environment = environment
        self.lemmas = lemmas

        self.predicates = kt_predicates(view)

        self.equal_maps: Set[str] = set()
        self.kt_references: List[str] = []
        self.map_references: List[str] = []

    def fresh(self, base: str) -> str:
        return self.view.supply.fresh(base)

    @staticmethod
    def _reference(references: List[str], head: str):

        if head not in references:
            references.append(head)

    def _pair(self, left: Evidence, right: Evidence, subject: Term) -> Term:
        return PairI((left(Fst(subject)), right(Snd(subject))))

    def _sum(self, left: Evidence, right: Evidence, subject: Term) -> Term:

        inl, inr = self.fresh("v"), self.fresh("v")

        return Case(
            subject,
            (
                CaseBranch("inl", inl, left(Var(inl))),
                CaseBranch("inr", inr, right(Var(inr))),
            ),
        )

    def _arrow(self, binds_domain: bool, codomain: Evidence, subject: Term) -> Term:
        """``\\z u -> C (f z)``, without ``u`` when the lifting does not bind
        the evidence of the domain."""

        variable = self.fresh("z")
        domain_evidence = self.fresh("u") if binds_domain else None

        body = codomain(apply(subject, Var(variable)))

        if domain_evidence is not None:
            body = Lam(domain_evidence, body)

        return Lam(variable, body)

    def _data(
        self,
        head: str,
        args: List[TypeExpr],
        targets: List[Term],
        children: List[Evidence],
        subject: Term,
        span=None,
    ) -> Term:
        """The evidence for ``H^ args targets subject``, obtained from
        ``H^KT args subject`` through a map of the lifting of ``H``."""

        types = [type_to_term(arg) for arg in args]

        if head == self.declaration.name:
            evidence = SelfCall(kt_name(head), tuple(types), subject)
        else:
            self._reference(self.kt_references, head)
            evidence = apply(FunctionRef(kt_name(head)), *types, subject)

        if all(isinstance(target, KTop) for target in targets):
            return evidence

        sources = [KTop(item) for item in types]
        declaration = self.environment[head]

        if declaration.is_equal or declaration.classification.is_gadt:

            self.equal_maps.add(head)

            proofs = [
                _refl_proof(self.view.supply)
                if isinstance(target, KTop)
                else self.lemmas.reflexive_proof(arg)
                for arg, target in zip(args, targets)
            ]

            return apply(
                FunctionRef(equal_map_name(head)),
                *types,
                *sources,
                *targets,
                *proofs,
                subject,
                evidence,
            )

        ensure_mappable(declaration, span)
        self._reference(self.map_references, head)

        morphisms = []

        for child in children:

            variable, ignored = self.fresh("z"), self.fresh("_")
            morphisms.append(Lam(variable, Lam(ignored, child(Var(variable)))))

        return MapCall(
            lift_map_name(head),
            (*types, *sources, *targets, *morphisms),
            subject,
            evidence,
        )

    def type_evidence(self, type_expr: TypeExpr, subject: Term) -> Term:

        if isinstance(lift_type(type_expr, self.predicates), KTop):
            return Tt()

        if isinstance(type_expr, (TProduct, TSum)):

            combine = self._pair if isinstance(type_expr, TProduct) else self._sum

            return combine(
                lambda item: self.type_evidence(type_expr.left, item),
                lambda item: self.type_evidence(type_expr.right, item),
                subject,
            )

        if isinstance(type_expr, TArrow):
            # Arr^ always binds the evidence of its domain.
            return self._arrow(
                True,
                lambda item: self.type_evidence(type_expr.codomain, item),
                subject,
            )

        assert isinstance(type_expr, TData)

        return self._data(
            type_expr.name,
            list(type_expr.args),
            [lift_type(arg, self.predicates) for arg in type_expr.args],
            [
                lambda item, arg=arg: self.type_evidence(arg, item)
                for arg in type_expr.args
            ],
            subject,
            type_expr.span,
        )

    def shape_evidence(
        self, shape: ShapeF, subject: Term, premise: bool = False
    ) -> Term:
        """The evidence for an argument of the given shape.

        Parameters
        ----------
        shape
            The shape of the argument.
        subject
            The term holding the argument.
        premise
            Whether ``shape`` is the shape of a whole constructor argument (or
            the codomain of one), whose function types are unfolded by the
            lifting rather than lifted by ``Arr^``.
        """

        if isinstance(shape, ConstS):
            return self.type_evidence(shape.source, subject)

        if isinstance(shape, RecS):

            return self._data(
                self.declaration.name,
                list(shape.args),
                [lift_type(arg, self.predicates) for arg in shape.args],
                [
                    lambda item, arg=arg: self.type_evidence(arg, item)
                    for arg in shape.args
                ],
                subject,
                shape.source.span,
            )

        if isinstance(shape, NestedS):

            recursive = LiftRef(self.declaration.name)

            return self._data(
                shape.head,
                [child.source for child in shape.children],
                [
                    derive_shape_lifting(child, recursive, self.predicates)
                    for child in shape.children
                ],
                [
                    lambda item, child=child: self.shape_evidence(child, item)
                    for child in shape.children
                ],
                subject,
                shape.source.span,
            )

        if isinstance(shape, (ProductS, SumS)):

            combine = self._pair if isinstance(shape, ProductS) else self._sum

            return combine(
                lambda item: self.shape_evidence(shape.left, item),
                lambda item: self.shape_evidence(shape.right, item),
                subject,
            )

        if isinstance(shape, ArrowS):

            binds_domain = not premise or not isinstance(
                lift_type(shape.domain, self.view.predicates), KTop
            )

            return self._arrow(
                binds_domain,
                lambda item: self.shape_evidence(shape.codomain, item, premise),
                subject,
            )

        raise _truly_nested(self.declaration)


def _truly_nested(declaration: DataDecl) -> DiagnosticError:

    return DiagnosticError(
        [
            make_diagnostic(
                DiagnosticCode.TRULY_NESTED_TYPE,
                f"no G^KT witness can be derived for the truly nested type "
                f"{declaration.name}",
                declaration.span,
                explanation=(
                    f"Mapping the evidence of a nested occurrence requires a map "
                    f"function for the lifting of {declaration.name} itself."
                ),
                declaration=declaration.name,
            )
        ]
    )


def kt_signature(declaration: DataDecl) -> Term:
    """``forall (A : Set) (x : G A) -> G^ A K_T x``"""

    indices = index_names(declaration.arity)
    subject = NameSupply(indices).fresh("x")

    return telescope(
        [
            *((index, SetSort()) for index in indices),
            (subject, data_type(declaration.name, *map(Var, indices))),
        ],
        apply(
            LiftRef(declaration.name),
            *map(Var, indices),
            *(KTop(Var(index)) for index in indices),
            Var(subject),
        ),
    )


def _kt_clause(builder: _KTBuilder) -> Clause:

    view, lemmas = builder.view, builder.lemmas

    constraint_patterns, components = [], []

    components.extend(KTop(Var(name)) for name in view.index_binders)

    for (variable, index), proof in zip(view.constraints, view.constraint_names):

        if isinstance(lift_type(index, builder.predicates), KTop):

            constraint_patterns.append(PCon(REFL))
            components.append(_refl_proof(view.supply))

        else:

            constraint_patterns.append(PVar(proof))
            components.append(lemmas.constraint_proof(variable, index, proof))

    for argument in view.arguments:

        if has_evidence(argument.shape, view.predicates):
            components.append(
                builder.shape_evidence(
                    argument.shape, Var(argument.name), premise=True
                )
            )

    patterns = (
        *map(PVar, view.return_variables),
        view.pattern(constraint_patterns),
    )

    return Clause(patterns, tuple_term(components))


def equal_map_signature(declaration: DataDecl) -> Term:
    """``forall (A : Set) (Q Q' : A -> Set) -> Equal^ A A Q Q' refl ->
    PredMap (G A) (G^ A Q) (G^ A Q')``"""

    indices = index_names(declaration.arity)
    names = map_predicate_names(declaration.arity)

    binders = [(index, SetSort()) for index in indices]
    premises = []

    for index, source, target in zip(indices, names["source"], names["target"]):

        binders.append((source, Arr(Var(index), SetSort())))
        binders.append((target, Arr(Var(index), SetSort())))

        premises.append(
            apply(
                LiftRef(EQUAL),
                Var(index),
                Var(index),
                Var(source),
                Var(target),
                CtorRef(REFL),
            )
        )

    lifting = LiftRef(declaration.name)

    conclusion = PredMapT(
        data_type(declaration.name, *map(Var, indices)),
        apply(lifting, *map(Var, indices), *map(Var, names["source"])),
        apply(lifting, *map(Var, indices), *map(Var, names["target"])),
    )

    return telescope(binders, arrows(premises, conclusion))


def equal_map_skeleton(declaration: DataDecl, environment) -> FunctionDef:
    """The skeleton of ``G^EqualMap``, transporting the lifting of a GADT along
    pointwise equal predicates, with one hole per constructor."""

    names = map_predicate_names(declaration.arity)
    indices = index_names(declaration.arity)

    proofs = (
        ["eq"] if declaration.arity == 1 else [f"eq_{index}" for index in indices]
    )

    reserved = [
        equal_map_name(declaration.name),
        *(name for group in names.values() for name in group),
        *proofs,
    ]

    clauses = []

    for view in declaration_views(declaration, environment, reserved):

        targets = {
            variable: Var(target)
            for variable, target in zip(view.return_variables, names["target"])
        }

        goal = apply(
            LiftRef(declaration.name),
            *map(Var, view.return_variables),
            *(targets[variable] for variable in view.return_variables),
            view.term(),
        )

        patterns = (
            *map(PVar, view.return_variables),
            *(
                PVar(name)
                for pair in zip(names["source"], names["target"])
                for name in pair
            ),
            *map(PVar, proofs),
            view.pattern(),
            PVar(view.supply.fresh("y")),
        )

        clauses.append(Clause(patterns, Hole(goal)))

    return FunctionDef(
        equal_map_name(declaration.name),
        equal_map_signature(declaration),
        tuple(clauses),
    )


def _kt_function(
    declaration: DataDecl, environment, lemmas: _Lemmas
) -> Tuple[FunctionDef, List[_KTBuilder]]:
    """Derives ``G^KT`` together with the builders of its clauses, which record
    the functions of other declarations it calls."""

    if declaration.is_equal:
        return equal_kt(), []

    ensure_derivable(declaration)

    if declaration.classification == Classification.TRULY_NESTED_TYPE:
        raise _truly_nested(declaration)

    logger.debug(f"deriving the K_T witness of {declaration.name}")

    encoded = henry_ford(declaration)

    builders = [
        _KTBuilder(declaration, view, environment, lemmas)
        for view in declaration_views(encoded, environment, [kt_name(declaration.name)])
    ]
    clauses = tuple(_kt_clause(builder) for builder in builders)

    function = FunctionDef(
        kt_name(declaration.name), kt_signature(declaration), clauses
    )

    return function, builders


class _Dependencies:
    """Collects, in order of definition, the ``H^KT`` witnesses, lifting maps
    and ``H^EqualMap`` skeletons of the other declarations ``H`` which a
    ``G^KT`` witness calls, as well as the lifting map of ``G`` itself."""

    def __init__(self, root: DataDecl, environment, lemmas: _Lemmas):

        self.environment = environment
        self.lemmas = lemmas

        self.functions: List[FunctionDef] = []

        self._defined = {kt_name(root.name), equal_map_name(root.name)}
        self._map_heads = {
            lift_map_name(declaration.name): declaration.name
            for declaration in environment
        }

    def _define(self, name: str) -> bool:

        if name in self._defined:
            return False

        self._defined.add(name)
        return True

    def _add_kt(self, head: str):

        if not self._define(kt_name(head)):
            return

        function, builders = _kt_function(
            self.environment[head], self.environment, self.lemmas
        )

        self.collect(builders)
        self.functions.append(function)

    def _add_map(self, head: str):

        if not self._define(lift_map_name(head)):
            return

        lift_map = derive_lift_map(self.environment[head], self.environment)

        for name in referenced_maps(clause.body for clause in lift_map.clauses):
            self._add_map(self._map_heads[name])

        self.functions.append(lift_map)

    def _add_equal_map(self, head: str):

        if not self._define(equal_map_name(head)):
            return

        self.functions.append(
            equal_map_skeleton(henry_ford(self.environment[head]), self.environment)
        )

    def collect(self, builders: List[_KTBuilder]):

        for builder in builders:

            for head in builder.kt_references:
                self._add_kt(head)
            for head in builder.map_references:
                self._add_map(head)
            for head in sorted(builder.equal_maps):
                self._add_equal_map(head)


def derive_kt_witness(declaration: DataDecl, environment) -> KTWitness:
    """Derives ``G^KT : forall (A : Set) (x : G A) -> G^ A K_T x``.

    Every existential predicate is chosen to be constantly true, recursive
    positions are discharged by recursive calls and nested positions through
    the map function of the lifting of the nesting type (for GADTs, through
    ``G^EqualMap``). Every lifted equality constraint whose right hand side is
    structured is discharged by a postulated lemma. The witnesses and maps of
    the other declarations called are derived alongside, sharing the lemmas.

    Raises
    ------
    DiagnosticError
        With a NULLARY_DECLARATION, TRULY_NESTED_GADT, TRULY_NESTED_TYPE or
        UNSUPPORTED_MAP diagnostic.
    """

    if declaration.is_equal:
        return KTWitness(equal_kt(), ())

    lemmas = _Lemmas()

    function, builders = _kt_function(declaration, environment, lemmas)

    dependencies = _Dependencies(declaration, environment, lemmas)
    dependencies.collect(builders)

    equal_map = (
        equal_map_skeleton(henry_ford(declaration), environment)
        if any(declaration.name in builder.equal_maps for builder in builders)
        else None
    )

    return KTWitness(
        function, lemmas.postulates, equal_map, tuple(dependencies.functions)
    )
