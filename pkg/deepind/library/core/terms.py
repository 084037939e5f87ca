"""The dependent type / witness term language in which liftings, induction
hypotheses, rules and soundness witnesses are expressed.

Bound variables are represented by name. ``deepind.library.core.alpha``
converts terms into a nameless form for comparison and serialization.
"""
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple


@dataclass(frozen=True)
class Term:
    """The base class of all terms."""


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class SetSort(Term):
    pass


@dataclass(frozen=True)
class Pi(Term):
    binder: str
    domain: Term
    body: Term


@dataclass(frozen=True)
class Sig(Term):
    """A dependent pair type, printed as an existential."""

    binder: str
    domain: Term
    body: Term


@dataclass(frozen=True)
class Lam(Term):
    binder: str
    body: Term
    domain: Optional[Term] = None


@dataclass(frozen=True)
class Arr(Term):
    domain: Term
    codomain: Term


@dataclass(frozen=True)
class Prod(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class SumT(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class App(Term):
    head: Term
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class DataRefT(Term):
    name: str


@dataclass(frozen=True)
class CtorRef(Term):
    name: str


@dataclass(frozen=True)
class LiftRef(Term):
    name: str


@dataclass(frozen=True)
class HypRef(Term):
    name: str


@dataclass(frozen=True)
class FunctionRef(Term):
    name: str


@dataclass(frozen=True)
class PostulateRef(Term):
    name: str


@dataclass(frozen=True)
class PredMapT(Term):
    carrier: Term
    source: Term
    target: Term


@dataclass(frozen=True)
class TopT(Term):
    pass


@dataclass(frozen=True)
class KTop(Term):
    carrier: Term


@dataclass(frozen=True)
class EqualT(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Tt(Term):
    pass


@dataclass(frozen=True)
class PairI(Term):
    items: Tuple[Term, ...]


@dataclass(frozen=True)
class Fst(Term):
    term: Term


@dataclass(frozen=True)
class Snd(Term):
    term: Term


@dataclass(frozen=True)
class CaseBranch:
    constructor: str
    binder: str
    body: Term


@dataclass(frozen=True)
class Case(Term):
    scrutinee: Term
    branches: Tuple[CaseBranch, ...]


@dataclass(frozen=True)
class SelfCall(Term):
    """A recursive reference to the function being defined. A call without a
    scrutinee is a partial application used as a predicate morphism."""

    function: str
    args: Tuple[Term, ...]
    scrutinee: Optional[Term] = None
    evidence: Optional[Term] = None


@dataclass(frozen=True)
class MapCall(Term):
    function: str
    args: Tuple[Term, ...]
    scrutinee: Optional[Term] = None
    evidence: Optional[Term] = None


@dataclass(frozen=True)
class HypCall(Term):
    hypothesis: Term
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Hole(Term):
    goal: Optional[Term] = None


@dataclass(frozen=True)
class Pattern:
    """The base class of clause patterns."""


@dataclass(frozen=True)
class PVar(Pattern):
    name: str


@dataclass(frozen=True)
class PCon(Pattern):
    constructor: str
    args: Tuple[Pattern, ...] = ()


@dataclass(frozen=True)
class PTuple(Pattern):
    items: Tuple[Pattern, ...]


@dataclass(frozen=True)
class PTt(Pattern):
    pass


@dataclass(frozen=True)
class Clause:
    patterns: Tuple[Pattern, ...]
    body: Term


@dataclass(frozen=True)
class FunctionDef:
    """A clause-per-constructor function together with its type."""

    name: str
    signature: Term
    clauses: Tuple[Clause, ...]


@dataclass(frozen=True)
class LiftingDef(FunctionDef):
    declaration: str


@dataclass(frozen=True)
class Postulate:
    name: str
    signature: Term


@dataclass(frozen=True)
class Hypothesis:
    name: str
    term: Term


class RuleKind(Enum):

    DEEP = "deep"
    STRUCTURAL = "structural"


@dataclass(frozen=True)
class RuleDef:

    name: str
    kind: RuleKind
    statement: Term
    hypotheses: Tuple[Hypothesis, ...]

    def expanded(self) -> "RuleDef":
        """Returns the rule with every named hypothesis application in its
        statement replaced by the hypothesis itself."""

        definitions = {
            hypothesis.name: hypothesis.term for hypothesis in self.hypotheses
        }
        statement = inline_hypotheses(self.statement, definitions)

        return RuleDef(self.name, self.kind, statement, ())


def pattern_variables(pattern: Pattern) -> Iterator[str]:
    """Yields the variables bound by a pattern from left to right."""

    if isinstance(pattern, PVar):
        yield pattern.name
    elif isinstance(pattern, PCon):
        for argument in pattern.args:
            yield from pattern_variables(argument)
    elif isinstance(pattern, PTuple):
        for item in pattern.items:
            yield from pattern_variables(item)


def tuple_pattern(items: List[Pattern]) -> Pattern:
    """Collapses the evidence pattern of a conjunction: zero components match
    the unit witness and a single component is not tupled."""

    if len(items) == 0:
        return PTt()
    if len(items) == 1:
        return items[0]

    return PTuple(tuple(items))


def tuple_term(items: List[Term]) -> Term:

    if len(items) == 0:
        return Tt()
    if len(items) == 1:
        return items[0]

    return PairI(tuple(items))


def conjunction(items: List[Term]) -> Term:
    """Right nests a list of propositions into products, the empty
    conjunction being ``Top``."""

    if len(items) == 0:
        return TopT()

    result = items[-1]

    for item in reversed(items[:-1]):
        result = Prod(item, result)

    return result


def apply(head: Term, *args: Term) -> Term:
    """Applies ``head`` to ``args`` keeping application spines flat."""

    if len(args) == 0:
        return head

    if isinstance(head, App):
        return App(head.head, head.args + tuple(args))

    return App(head, tuple(args))


def telescope(binders: Iterable[Tuple[str, Term]], body: Term) -> Term:
    """Builds ``forall (x1 : T1) ... (xn : Tn) -> body``."""

    for name, domain in reversed(list(binders)):
        body = Pi(name, domain, body)

    return body


def arrows(premises: Iterable[Term], body: Term) -> Term:

    for premise in reversed(list(premises)):
        body = Arr(premise, body)

    return body


_BINDING_NODES = (Pi, Sig, Lam)


def _term_fields(term: Term) -> Iterator[Tuple[str, object]]:

    for term_field in fields(term):
        yield term_field.name, getattr(term, term_field.name)


def map_children(term: Term, function) -> Term:
    """Rebuilds ``term`` with ``function`` applied to each of its direct sub
    terms. Binders are not treated specially."""

    updates = {}

    for name, value in _term_fields(term):

        if isinstance(value, Term):
            updates[name] = function(value)
        elif isinstance(value, tuple):
            updates[name] = tuple(
                replace(item, body=function(item.body))
                if isinstance(item, CaseBranch)
                else function(item)
                for item in value
            )

    return replace(term, **updates) if len(updates) > 0 else term


def free_variables(term: Term) -> Set[str]:

    if isinstance(term, Var):
        return {term.name}

    if isinstance(term, _BINDING_NODES):

        domain_variables = (
            set() if term.domain is None else free_variables(term.domain)
        )
        return domain_variables | (free_variables(term.body) - {term.binder})

    if isinstance(term, Case):

        variables = free_variables(term.scrutinee)

        for branch in term.branches:
            variables |= free_variables(branch.body) - {branch.binder}

        return variables

    variables = set()

    for _, value in _term_fields(term):

        if isinstance(value, Term):
            variables |= free_variables(value)
        elif isinstance(value, tuple):
            for item in value:
                if isinstance(item, Term):
                    variables |= free_variables(item)

    return variables


def fresh_name(base: str, avoid: Set[str]) -> str:

    name = base

    while name in avoid:
        name = name + "'"

    return name


def substitute(term: Term, mapping: Dict[str, Term]) -> Term:
    """Capture avoiding substitution of free variables."""

    if len(mapping) == 0:
        return term

    if isinstance(term, Var):
        return mapping.get(term.name, term)

    if isinstance(term, _BINDING_NODES):

        domain = None if term.domain is None else substitute(term.domain, mapping)
        binder, body = _substitute_under(term.binder, term.body, mapping)

        return replace(term, binder=binder, domain=domain, body=body)

    if isinstance(term, Case):

        branches = []

        for branch in term.branches:
            binder, body = _substitute_under(branch.binder, branch.body, mapping)
            branches.append(CaseBranch(branch.constructor, binder, body))

        return Case(substitute(term.scrutinee, mapping), tuple(branches))

    return map_children(term, lambda child: substitute(child, mapping))


def _substitute_under(binder: str, body: Term, mapping: Dict[str, Term]):

    inner = {name: value for name, value in mapping.items() if name != binder}

    if len(inner) == 0:
        return binder, body

    captured = set()

    for value in inner.values():
        captured |= free_variables(value)

    if binder in captured:

        renamed = fresh_name(binder, captured | free_variables(body) | set(inner))
        body = substitute(body, {binder: Var(renamed)})
        binder = renamed

    return binder, substitute(body, inner)


def inline_hypotheses(term: Term, definitions: Dict[str, Term]) -> Term:
    """Replaces applications of named hypotheses by their beta reduced
    definitions."""

    if isinstance(term, App) and isinstance(term.head, HypRef):

        if term.head.name in definitions:

            body = definitions[term.head.name]
            args = [inline_hypotheses(arg, definitions) for arg in term.args]

            while len(args) > 0 and isinstance(body, Lam):
                body = substitute(body.body, {body.binder: args.pop(0)})

            return apply(body, *args)

    return map_children(term, lambda child: inline_hypotheses(child, definitions))


def spine(term: Term) -> Tuple[Term, Tuple[Term, ...]]:
    """Splits an application into its head and arguments."""

    if isinstance(term, App):
        return term.head, term.args

    return term, ()


def type_to_term(type_expr) -> Term:
    """Embeds a declaration level type expression into the term language."""

    from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar

    if isinstance(type_expr, TVar):
        return Var(type_expr.name)
    if isinstance(type_expr, TUnit):
        return TopT()
    if isinstance(type_expr, TProduct):
        return Prod(type_to_term(type_expr.left), type_to_term(type_expr.right))
    if isinstance(type_expr, TSum):
        return SumT(type_to_term(type_expr.left), type_to_term(type_expr.right))
    if isinstance(type_expr, TArrow):
        return Arr(type_to_term(type_expr.domain), type_to_term(type_expr.codomain))

    assert isinstance(type_expr, TData)

    return data_type(type_expr.name, *(type_to_term(arg) for arg in type_expr.args))


def data_type(name: str, *args: Term) -> Term:
    """The type constructor ``name`` applied to ``args``."""

    from deepind.library.core.declarations import EQUAL

    if name == EQUAL and len(args) == 2:
        return EqualT(*args)

    return apply(DataRefT(name), *args)


def subterms(term: Term) -> Iterator[Term]:
    """Yields ``term`` and every term nested inside it in pre-order."""

    yield term

    for _, value in _term_fields(term):

        if isinstance(value, Term):
            yield from subterms(value)

        elif isinstance(value, tuple):

            for item in value:

                if isinstance(item, CaseBranch):
                    yield from subterms(item.body)
                elif isinstance(item, Term):
                    yield from subterms(item)


def definition_terms(definition: FunctionDef) -> Iterator[Term]:
    """Yields every term of a function definition: its signature followed by
    each clause body."""

    yield definition.signature

    for clause in definition.clauses:
        yield clause.body
