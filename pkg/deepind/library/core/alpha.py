"""Conversion between named terms and a nameless (de Bruijn indexed) JSON
compatible form, and alpha equivalence defined on top of it."""
from typing import Any, Dict, List, Optional

from deepind.library.core.declarations import (
    Binder,
    Classification,
    ConstructorDecl,
    DataDecl,
)
from deepind.library.core.terms import (
    App,
    Arr,
    Case,
    CaseBranch,
    Clause,
    CtorRef,
    DataRefT,
    EqualT,
    Fst,
    FunctionDef,
    FunctionRef,
    Hole,
    HypCall,
    Hypothesis,
    HypRef,
    KTop,
    Lam,
    LiftingDef,
    LiftRef,
    MapCall,
    PairI,
    PCon,
    Pi,
    Postulate,
    PostulateRef,
    PredMapT,
    Prod,
    PTt,
    PTuple,
    PVar,
    RuleDef,
    RuleKind,
    SelfCall,
    SetSort,
    Sig,
    Snd,
    SumT,
    Term,
    TopT,
    Tt,
    Var,
)
from deepind.library.core.types import TArrow, TData, TProduct, TSum, TUnit, TVar

JSON = Dict[str, Any]

_NAMED_LEAVES = {
    DataRefT: "data",
    CtorRef: "ctor",
    LiftRef: "lift",
    HypRef: "hyp",
    FunctionRef: "function",
    PostulateRef: "postulate",
}
_EMPTY_LEAVES = {SetSort: "set", TopT: "top", Tt: "tt"}
_BINARY_NODES = {
    Arr: ("arr", "domain", "codomain"),
    Prod: ("prod", "left", "right"),
    SumT: ("sum", "left", "right"),
    EqualT: ("equal", "left", "right"),
}
_UNARY_NODES = {
    KTop: ("ktop", "carrier"),
    Fst: ("fst", "term"),
    Snd: ("snd", "term"),
}
_TYPE_BINARY_NODES = {
    TProduct: ("tproduct", "left", "right"),
    TSum: ("tsum", "left", "right"),
    TArrow: ("tarrow", "domain", "codomain"),
}


class _Encoder:
    def __init__(self, hints: bool):
        self.hints = hints

    def _bind(self, node: JSON, key: str, name: str) -> JSON:

        if self.hints:
            node[key] = name

        return node

    def variable(self, name: str, context: List[str], node_kind="var") -> JSON:

        if name not in context:
            return {"node": "free", "name": name}

        index = len(context) - 1 - max(
            position for position, bound in enumerate(context) if bound == name
        )

        return self._bind({"node": node_kind, "index": index}, "hint", name)

    def optional(self, term: Optional[Term], context: List[str]) -> Optional[JSON]:
        return None if term is None else self.term(term, context)

    def terms(self, terms, context: List[str]) -> List[JSON]:
        return [self.term(term, context) for term in terms]

    def term(self, term: Term, context: List[str]) -> JSON:

        term_type = type(term)

        if isinstance(term, Var):
            return self.variable(term.name, context)

        if term_type in _NAMED_LEAVES:
            return {"node": _NAMED_LEAVES[term_type], "name": term.name}
        if term_type in _EMPTY_LEAVES:
            return {"node": _EMPTY_LEAVES[term_type]}

        if term_type in _BINARY_NODES:
            kind, left, right = _BINARY_NODES[term_type]
            return {
                "node": kind,
                left: self.term(getattr(term, left), context),
                right: self.term(getattr(term, right), context),
            }
        if term_type in _UNARY_NODES:
            kind, child = _UNARY_NODES[term_type]
            return {"node": kind, child: self.term(getattr(term, child), context)}

        if isinstance(term, (Pi, Sig)):

            node = {
                "node": "pi" if isinstance(term, Pi) else "sig",
                "domain": self.term(term.domain, context),
                "body": self.term(term.body, [*context, term.binder]),
            }
            return self._bind(node, "binder", term.binder)

        if isinstance(term, Lam):

            node = {
                "node": "lam",
                "domain": self.optional(term.domain, context),
                "body": self.term(term.body, [*context, term.binder]),
            }
            return self._bind(node, "binder", term.binder)

        if isinstance(term, App):

            if isinstance(term.head, Var):
                return {
                    "node": "predapp",
                    "predicate": self.term(term.head, context),
                    "args": self.terms(term.args, context),
                }

            return {
                "node": "app",
                "head": self.term(term.head, context),
                "args": self.terms(term.args, context),
            }

        if isinstance(term, PredMapT):
            return {
                "node": "predmap",
                "carrier": self.term(term.carrier, context),
                "source": self.term(term.source, context),
                "target": self.term(term.target, context),
            }

        if isinstance(term, PairI):
            return {"node": "pair", "items": self.terms(term.items, context)}

        if isinstance(term, Case):
            return {
                "node": "case",
                "scrutinee": self.term(term.scrutinee, context),
                "branches": [
                    self._bind(
                        {
                            "constructor": branch.constructor,
                            "body": self.term(branch.body, [*context, branch.binder]),
                        },
                        "binder",
                        branch.binder,
                    )
                    for branch in term.branches
                ],
            }

        if isinstance(term, (SelfCall, MapCall)):
            return {
                "node": "selfcall" if isinstance(term, SelfCall) else "mapcall",
                "function": term.function,
                "args": self.terms(term.args, context),
                "scrutinee": self.optional(term.scrutinee, context),
                "evidence": self.optional(term.evidence, context),
            }

        if isinstance(term, HypCall):
            return {
                "node": "hypcall",
                "hypothesis": self.term(term.hypothesis, context),
                "args": self.terms(term.args, context),
            }

        if isinstance(term, Hole):
            return {"node": "hole", "goal": self.optional(term.goal, context)}

        raise NotImplementedError(f"cannot encode {term_type.__name__}")

    def pattern(self, pattern, context: List[str], bound: List[str]) -> JSON:
        """Encodes a pattern, appending the variables it binds to ``context``.
        ``bound`` tracks the variables bound so far by the enclosing clause so
        that repeated (non-linear) variables refer back to their first
        occurrence."""

        if isinstance(pattern, PVar):

            if pattern.name in bound:
                return self.variable(pattern.name, context, node_kind="pref")

            context.append(pattern.name)
            bound.append(pattern.name)

            return self._bind({"node": "pvar"}, "name", pattern.name)

        if isinstance(pattern, PCon):
            return {
                "node": "pcon",
                "constructor": pattern.constructor,
                "args": [self.pattern(arg, context, bound) for arg in pattern.args],
            }
        if isinstance(pattern, PTuple):
            return {
                "node": "ptuple",
                "items": [self.pattern(item, context, bound) for item in pattern.items],
            }
        if isinstance(pattern, PTt):
            return {"node": "ptt"}

        raise NotImplementedError(f"cannot encode {type(pattern).__name__}")

    def clause(self, clause: Clause) -> JSON:

        context, bound = [], []
        patterns = [
            self.pattern(pattern, context, bound) for pattern in clause.patterns
        ]

        return {"patterns": patterns, "body": self.term(clause.body, context)}

    def type_expr(self, type_expr, context: List[str]) -> JSON:

        if isinstance(type_expr, TVar):
            return self.variable(type_expr.name, context, node_kind="tvar")
        if isinstance(type_expr, TData):
            return {
                "node": "tdata",
                "name": type_expr.name,
                "args": [self.type_expr(arg, context) for arg in type_expr.args],
            }
        if isinstance(type_expr, TUnit):
            return {"node": "tunit"}

        kind, left, right = _TYPE_BINARY_NODES[type(type_expr)]

        return {
            "node": kind,
            left: self.type_expr(getattr(type_expr, left), context),
            right: self.type_expr(getattr(type_expr, right), context),
        }

    def constructor(self, constructor: ConstructorDecl) -> JSON:

        context = constructor.binder_names
        node = {
            "node": "constructor",
            "name": constructor.name,
            "binders": len(constructor.binders),
            "domain": [self.type_expr(arg, context) for arg in constructor.domain],
            "indices": [self.type_expr(arg, context) for arg in constructor.indices],
        }

        if self.hints:
            node["binder_hints"] = [
                {"name": binder.name, "implicit": binder.implicit}
                for binder in constructor.binders
            ]

        return node

    def encode(self, value) -> JSON:

        if isinstance(value, Term):
            return self.term(value, [])

        if isinstance(value, FunctionDef):

            node = {
                "node": "definition",
                "name": value.name,
                "signature": self.term(value.signature, []),
                "clauses": [self.clause(clause) for clause in value.clauses],
            }

            if isinstance(value, LiftingDef):
                node["declaration"] = value.declaration

            return node

        if isinstance(value, RuleDef):
            return {
                "node": "rule",
                "name": value.name,
                "rule_kind": value.kind.value,
                "statement": self.term(value.statement, []),
                "hypotheses": [self.encode(item) for item in value.hypotheses],
            }
        if isinstance(value, Hypothesis):
            return {
                "node": "hypothesis",
                "name": value.name,
                "term": self.term(value.term, []),
            }
        if isinstance(value, Postulate):
            return {
                "node": "axiom",
                "name": value.name,
                "signature": self.term(value.signature, []),
            }
        if isinstance(value, ConstructorDecl):
            return self.constructor(value)
        if isinstance(value, DataDecl):
            return {
                "node": "declaration",
                "name": value.name,
                "arity": value.arity,
                "classification": None
                if value.classification is None
                else value.classification.value,
                "constructors": [self.constructor(item) for item in value.constructors],
            }

        return self.type_expr(value, [])


def to_nameless(value, hints: bool = False) -> JSON:
    """Converts a term, definition, rule, type expression or declaration into
    its nameless JSON compatible form.

    Parameters
    ----------
    value
        The object to convert.
    hints
        Whether to record the original binder names alongside the indices. The
        hints are ignored when comparing for alpha equivalence.
    """
    return _Encoder(hints).encode(value)


def alpha_eq(a, b) -> bool:
    """Returns whether two objects are equal up to a consistent renaming of
    their bound variables. Telescopes are compared positionally."""

    if type(a) != type(b):
        return False

    return to_nameless(a) == to_nameless(b)


class _Decoder:
    def _name(self, hint: Optional[str], context: List[str]) -> str:

        name = hint

        if name is None:
            name = f"x{len(context)}"

        while name in context:
            name = name + "'"

        return name

    def variable(self, node: JSON, context: List[str]) -> str:

        if node["node"] == "free":
            return node["name"]

        return context[len(context) - 1 - node["index"]]

    def optional(self, node: Optional[JSON], context: List[str]) -> Optional[Term]:
        return None if node is None else self.term(node, context)

    def terms(self, nodes: List[JSON], context: List[str]):
        return tuple(self.term(node, context) for node in nodes)

    def term(self, node: JSON, context: List[str]) -> Term:

        kind = node["node"]

        if kind in ("var", "free"):
            return Var(self.variable(node, context))

        for term_type, name in _NAMED_LEAVES.items():
            if kind == name:
                return term_type(node["name"])
        for term_type, name in _EMPTY_LEAVES.items():
            if kind == name:
                return term_type()
        for term_type, (name, left, right) in _BINARY_NODES.items():
            if kind == name:
                return term_type(
                    self.term(node[left], context), self.term(node[right], context)
                )
        for term_type, (name, child) in _UNARY_NODES.items():
            if kind == name:
                return term_type(self.term(node[child], context))

        if kind in ("pi", "sig", "lam"):

            binder = self._name(node.get("binder"), context)
            body = self.term(node["body"], [*context, binder])

            if kind == "lam":
                return Lam(binder, body, self.optional(node["domain"], context))

            domain = self.term(node["domain"], context)
            return (Pi if kind == "pi" else Sig)(binder, domain, body)

        if kind == "predapp":
            return App(
                self.term(node["predicate"], context), self.terms(node["args"], context)
            )
        if kind == "app":
            return App(
                self.term(node["head"], context), self.terms(node["args"], context)
            )
        if kind == "predmap":
            return PredMapT(
                self.term(node["carrier"], context),
                self.term(node["source"], context),
                self.term(node["target"], context),
            )
        if kind == "pair":
            return PairI(self.terms(node["items"], context))
        if kind == "case":

            branches = []

            for branch in node["branches"]:

                binder = self._name(branch.get("binder"), context)
                body = self.term(branch["body"], [*context, binder])

                branches.append(CaseBranch(branch["constructor"], binder, body))

            return Case(self.term(node["scrutinee"], context), tuple(branches))

        if kind in ("selfcall", "mapcall"):
            return (SelfCall if kind == "selfcall" else MapCall)(
                node["function"],
                self.terms(node["args"], context),
                self.optional(node["scrutinee"], context),
                self.optional(node["evidence"], context),
            )
        if kind == "hypcall":
            return HypCall(
                self.term(node["hypothesis"], context),
                self.terms(node["args"], context),
            )
        if kind == "hole":
            return Hole(self.optional(node["goal"], context))

        raise NotImplementedError(f"unknown term node {kind}")

    def pattern(self, node: JSON, context: List[str]):

        kind = node["node"]

        if kind == "pvar":

            name = self._name(node.get("name"), context)
            context.append(name)

            return PVar(name)

        if kind in ("pref", "free"):
            return PVar(self.variable(node, context))
        if kind == "pcon":
            return PCon(
                node["constructor"],
                tuple(self.pattern(arg, context) for arg in node["args"]),
            )
        if kind == "ptuple":
            return PTuple(tuple(self.pattern(item, context) for item in node["items"]))
        if kind == "ptt":
            return PTt()

        raise NotImplementedError(f"unknown pattern node {kind}")

    def clause(self, node: JSON) -> Clause:

        context = []
        patterns = tuple(self.pattern(pattern, context) for pattern in node["patterns"])

        return Clause(patterns, self.term(node["body"], context))

    def type_expr(self, node: JSON, context: List[str]):

        kind = node["node"]

        if kind in ("tvar", "free"):
            return TVar(self.variable(node, context))
        if kind == "tdata":
            return TData(
                node["name"],
                tuple(self.type_expr(arg, context) for arg in node["args"]),
            )
        if kind == "tunit":
            return TUnit()

        for type_class, (name, left, right) in _TYPE_BINARY_NODES.items():
            if kind == name:
                return type_class(
                    self.type_expr(node[left], context),
                    self.type_expr(node[right], context),
                )

        raise NotImplementedError(f"unknown type node {kind}")

    def constructor(self, node: JSON) -> ConstructorDecl:

        hints = node.get("binder_hints", [{}] * node["binders"])
        context, binders = [], []

        for hint in hints:

            name = self._name(hint.get("name"), context)
            context.append(name)
            binders.append(Binder(name, hint.get("implicit", False)))

        return ConstructorDecl(
            node["name"],
            tuple(binders),
            tuple(self.type_expr(arg, context) for arg in node["domain"]),
            tuple(self.type_expr(arg, context) for arg in node["indices"]),
        )

    def decode(self, node: JSON):

        kind = node["node"]

        if kind == "definition":

            signature = self.term(node["signature"], [])
            clauses = tuple(self.clause(clause) for clause in node["clauses"])

            if "declaration" in node:
                return LiftingDef(node["name"], signature, clauses, node["declaration"])

            return FunctionDef(node["name"], signature, clauses)

        if kind == "rule":
            return RuleDef(
                node["name"],
                RuleKind(node["rule_kind"]),
                self.term(node["statement"], []),
                tuple(self.decode(item) for item in node["hypotheses"]),
            )
        if kind == "hypothesis":
            return Hypothesis(node["name"], self.term(node["term"], []))
        if kind == "axiom":
            return Postulate(node["name"], self.term(node["signature"], []))
        if kind == "constructor":
            return self.constructor(node)
        if kind == "declaration":
            return DataDecl(
                node["name"],
                node["arity"],
                tuple(self.constructor(item) for item in node["constructors"]),
                None
                if node["classification"] is None
                else Classification(node["classification"]),
            )
        if kind in ("tvar", "tdata", "tunit", "tproduct", "tsum", "tarrow"):
            return self.type_expr(node, [])

        return self.term(node, [])


def from_nameless(node: JSON):
    """The inverse of ``to_nameless``: rebuilds named objects, taking binder
    names from the recorded hints where present."""
    return _Decoder().decode(node)
