"""A pretty printer rendering terms, patterns and definitions in an Agda like
concrete syntax, either in plain ASCII or with unicode symbols."""
from typing import List, Tuple

from deepind.library.core.terms import (
    App,
    Arr,
    Case,
    Clause,
    CtorRef,
    DataRefT,
    EqualT,
    Fst,
    FunctionRef,
    Hole,
    HypCall,
    HypRef,
    KTop,
    Lam,
    LiftRef,
    MapCall,
    PairI,
    PCon,
    Pattern,
    Pi,
    PostulateRef,
    PredMapT,
    Prod,
    PTt,
    PTuple,
    PVar,
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

_BINDING, _ARROW, _SUM, _PRODUCT, _APPLICATION, _ATOM = range(6)

_ASCII = {
    "forall": "forall",
    "exists": "exists {} . ",
    "lambda": "\\",
    "arrow": "->",
    "product": "*",
    "sum": "+",
    "top": "Top",
    "ktop": "K_T",
    "lift": "^",
}
_UNICODE = {
    "forall": "∀",
    "exists": "∃[ {} ] ",
    "lambda": "λ",
    "arrow": "→",
    "product": "×",
    "sum": "⊎",
    "top": "⊤",
    "ktop": "K⊤",
    "lift": "^",
}


class _Printer:
    def __init__(self, unicode: bool):
        self.symbols = _UNICODE if unicode else _ASCII

    def _parenthesize(self, text: str, level: int, context: int) -> str:
        return f"({text})" if level < context else text

    def _application(self, head: str, args, context: int) -> str:

        if len(args) == 0:
            return head

        text = " ".join([head, *(self.term(arg, _ATOM) for arg in args)])
        return self._parenthesize(text, _APPLICATION, context)

    def _telescope(self, term: Term) -> Tuple[List[Tuple[List[str], Term]], Term]:
        """Collects consecutive quantifiers, grouping the binders which share a
        domain."""

        groups: List[Tuple[List[str], Term]] = []

        while isinstance(term, Pi):

            if len(groups) > 0 and groups[-1][1] == term.domain:
                groups[-1][0].append(term.binder)
            else:
                groups.append(([term.binder], term.domain))

            term = term.body

        return groups, term

    def _pi(self, term: Pi, context: int) -> str:

        groups, body = self._telescope(term)

        binders = " ".join(
            f"({' '.join(names)} : {self.term(domain, _BINDING)})"
            for names, domain in groups
        )

        text = (
            f"{self.symbols['forall']} {binders} {self.symbols['arrow']} "
            f"{self.term(body, _BINDING)}"
        )
        return self._parenthesize(text, _BINDING, context)

    def _lambda(self, term: Lam, context: int) -> str:

        binders = []

        while isinstance(term, Lam):

            binders.append(
                term.binder
                if term.domain is None
                else f"({term.binder} : {self.term(term.domain, _BINDING)})"
            )
            term = term.body

        text = (
            f"{self.symbols['lambda']}{' '.join(binders)} {self.symbols['arrow']} "
            f"{self.term(term, _BINDING)}"
        )
        return self._parenthesize(text, _BINDING, context)

    def _call(self, term, context: int) -> str:

        args = [
            *term.args,
            *(item for item in (term.scrutinee, term.evidence) if item is not None),
        ]
        return self._application(term.function, args, context)

    def term(self, term: Term, context: int = _BINDING) -> str:

        symbols = self.symbols

        if isinstance(term, Var):
            return term.name
        if isinstance(term, SetSort):
            return "Set"
        if isinstance(term, (DataRefT, CtorRef, HypRef, FunctionRef, PostulateRef)):
            return term.name
        if isinstance(term, LiftRef):
            return f"{term.name}{symbols['lift']}"
        if isinstance(term, TopT):
            return symbols["top"]
        if isinstance(term, Tt):
            return "tt"

        if isinstance(term, Pi):
            return self._pi(term, context)

        if isinstance(term, Sig):

            text = symbols["exists"].format(term.binder) + self.term(
                term.body, _BINDING
            )
            return self._parenthesize(text, _BINDING, context)

        if isinstance(term, Lam):
            return self._lambda(term, context)

        if isinstance(term, Arr):

            text = (
                f"{self.term(term.domain, _SUM)} {symbols['arrow']} "
                f"{self.term(term.codomain, _ARROW)}"
            )
            return self._parenthesize(text, _ARROW, context)

        if isinstance(term, SumT):

            text = (
                f"{self.term(term.left, _PRODUCT)} {symbols['sum']} "
                f"{self.term(term.right, _SUM)}"
            )
            return self._parenthesize(text, _SUM, context)

        if isinstance(term, Prod):

            text = (
                f"{self.term(term.left, _APPLICATION)} {symbols['product']} "
                f"{self.term(term.right, _PRODUCT)}"
            )
            return self._parenthesize(text, _PRODUCT, context)

        if isinstance(term, App):
            return self._application(self.term(term.head, _ATOM), term.args, context)

        if isinstance(term, KTop):
            return self._application(symbols["ktop"], [term.carrier], context)
        if isinstance(term, EqualT):
            return self._application("Equal", [term.left, term.right], context)
        if isinstance(term, PredMapT):
            return self._application(
                "PredMap", [term.carrier, term.source, term.target], context
            )
        if isinstance(term, Fst):
            return self._application("fst", [term.term], context)
        if isinstance(term, Snd):
            return self._application("snd", [term.term], context)

        if isinstance(term, PairI):
            return "(" + ", ".join(self.term(item) for item in term.items) + ")"

        if isinstance(term, Case):

            branches = "; ".join(
                f"{branch.constructor} {branch.binder} {symbols['arrow']} "
                f"{self.term(branch.body)}"
                for branch in term.branches
            )
            text = f"case {self.term(term.scrutinee, _APPLICATION)} of {{ {branches} }}"

            return self._parenthesize(text, _BINDING, context)

        if isinstance(term, (SelfCall, MapCall)):
            return self._call(term, context)

        if isinstance(term, HypCall):
            return self._application(
                self.term(term.hypothesis, _ATOM), term.args, context
            )

        if isinstance(term, Hole):
            return "{! !}" if term.goal is None else f"{{! {self.term(term.goal)} !}}"

        raise NotImplementedError(f"cannot print terms of type {type(term).__name__}")

    def pattern(self, pattern: Pattern, nested: bool = False) -> str:

        if isinstance(pattern, PVar):
            return pattern.name
        if isinstance(pattern, PTt):
            return "tt"
        if isinstance(pattern, PTuple):
            return "(" + ", ".join(self.pattern(item) for item in pattern.items) + ")"

        assert isinstance(pattern, PCon)

        if len(pattern.args) == 0:
            return pattern.constructor

        text = " ".join(
            [pattern.constructor, *(self.pattern(arg, True) for arg in pattern.args)]
        )
        return f"({text})" if nested else text


def pretty_term(term: Term, unicode: bool = False) -> str:
    """Renders a term on a single line."""
    return _Printer(unicode).term(term)


def pretty_pattern(pattern: Pattern, unicode: bool = False) -> str:
    return _Printer(unicode).pattern(pattern, True)


def pretty_clause(name: str, clause: Clause, unicode: bool = False) -> str:
    """Renders ``name p1 ... pn = body``."""

    printer = _Printer(unicode)
    patterns = " ".join(printer.pattern(item, True) for item in clause.patterns)

    return f"{name} {patterns} = {printer.term(clause.body)}"
