"""A parser for the surface language of data declarations, e.g.

.. code-block:: text

    -- sequences whose elements are nested pairs
    data Seq : Set -> Set where
      const : forall {A : Set} . A -> Seq A
      pair : forall {A : Set} (B C : Set) . Equal A (B * C) -> Seq B -> Seq C -> Seq A

Application binds tightest, followed by ``*``, ``+`` and ``->``, all of which
associate to the right.
"""
import functools
import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import pyparsing as pp

from deepind.library.core.declarations import Binder, ConstructorDecl, DataDecl
from deepind.library.core.types import (
    BUILTIN_TYPES,
    SourceSpan,
    TArrow,
    TData,
    TProduct,
    TSum,
    TUnit,
    TVar,
    TypeExpr,
    walk,
)
from deepind.library.models.diagnostics import (
    Diagnostic,
    DiagnosticCode,
    byte_offset,
    make_diagnostic,
)
from deepind.library.utilities import read_data_file
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)

KEYWORDS = ["data", "where", "forall", "Set", "Unit"]

_LEADING_PADDING = re.compile(r"(?:\s|--[^\n]*)*")
_TRAILING_PADDING = re.compile(r"(?:\s|--[^\n]*)*\Z")


@dataclass(frozen=True)
class RawType:
    span: SourceSpan


@dataclass(frozen=True)
class RawUnit(RawType):
    pass


@dataclass(frozen=True)
class RawName(RawType):
    name: str


@dataclass(frozen=True)
class RawApp(RawType):
    head: str
    args: Tuple[RawType, ...]


@dataclass(frozen=True)
class RawProduct(RawType):
    left: RawType
    right: RawType


@dataclass(frozen=True)
class RawSum(RawType):
    left: RawType
    right: RawType


@dataclass(frozen=True)
class RawArrow(RawType):
    domain: RawType
    codomain: RawType


@dataclass(frozen=True)
class RawConstructor:
    name: str
    binders: Tuple[Binder, ...]
    type: RawType
    span: SourceSpan


@dataclass(frozen=True)
class RawDeclaration:
    name: str
    arity: int
    constructors: Tuple[RawConstructor, ...]
    span: SourceSpan


def _trimmed(text: str, start: int, end: int) -> Tuple[int, int]:
    """Narrows ``text[start:end]`` to exclude the whitespace and comments
    skipped before and after the matched tokens."""

    start = _LEADING_PADDING.match(text, start, end).end()
    end = _TRAILING_PADDING.search(text, start, end).start()

    return start, end


def _located(expression: pp.ParserElement, build) -> pp.ParserElement:
    """Wraps an expression so that ``build(span, tokens)`` receives the byte
    span of the matched text."""

    def action(text, _, tokens):

        start, end = _trimmed(text, tokens["locn_start"], tokens["locn_end"])

        span = (byte_offset(text, start), byte_offset(text, end))
        return build(span, list(tokens["value"]))

    return pp.Located(expression).set_parse_action(action)


def _fold_right(node_type):
    """Folds ``a op b op c`` into ``a op (b op c)``."""

    def action(tokens):

        items = list(tokens)
        result = items[-1]

        for item in reversed(items[:-1]):
            result = node_type((item.span[0], result.span[1]), item, result)

        return result

    return action


@functools.lru_cache()
def _grammar() -> pp.ParserElement:

    COLON, DOT, ARROW, STAR, PLUS = map(pp.Suppress, [":", ".", "->", "*", "+"])
    LPAREN, RPAREN, LBRACE, RBRACE = map(pp.Suppress, "(){}")

    DATA, WHERE, FORALL, SET, UNIT = map(pp.Keyword, KEYWORDS)

    keyword = pp.MatchFirst([pp.Keyword(item) for item in KEYWORDS])
    name = ~keyword + pp.Word(pp.alphas + "_", pp.alphanums + "_'")

    # A name followed by a colon starts the next constructor.
    reference = name + ~pp.Literal(":")

    type_expr = pp.Forward()

    atom = (
        _located(UNIT, lambda span, _: RawUnit(span))
        | _located(reference, lambda span, tokens: RawName(span, tokens[0]))
        | LPAREN + type_expr + RPAREN
    )

    application = (
        _located(
            reference + atom[1, ...],
            lambda span, tokens: RawApp(span, tokens[0], tuple(tokens[1:])),
        )
        | atom
    )

    product = (application + (STAR + application)[...]).set_parse_action(
        _fold_right(RawProduct)
    )
    sum_ = (product + (PLUS + product)[...]).set_parse_action(_fold_right(RawSum))

    type_expr <<= (sum_ + (ARROW + sum_)[...]).set_parse_action(
        _fold_right(RawArrow)
    )

    implicit = LBRACE + name[1, ...] + pp.Opt(COLON + SET).suppress() + RBRACE
    implicit.set_parse_action(lambda tokens: [Binder(item, True) for item in tokens])

    explicit = LPAREN + name[1, ...] + COLON + SET.suppress() + RPAREN
    explicit.set_parse_action(lambda tokens: [Binder(item) for item in tokens])

    binders = pp.Group(
        pp.Opt(FORALL.suppress() + (implicit | explicit)[1, ...] + DOT)
    )

    constructor = _located(
        name + COLON - (binders + type_expr),
        lambda span, tokens: RawConstructor(
            tokens[0], tuple(tokens[1]), tokens[2], span
        ),
    )

    signature = SET + (ARROW + SET)[...]
    signature.set_parse_action(lambda tokens: len(tokens) - 1)

    declaration = _located(
        DATA.suppress()
        - (name + COLON + signature + WHERE.suppress() + constructor[...]),
        lambda span, tokens: RawDeclaration(
            tokens[0], tokens[1], tuple(tokens[2:]), span
        ),
    )

    module = declaration[...]
    module.ignore(pp.Regex(r"--[^\n]*"))

    return module


@dataclass(frozen=True)
class SourceModule:
    """A parsed and name resolved module together with the prelude its names
    were resolved against."""

    declarations: Tuple[DataDecl, ...]
    prelude: Tuple[DataDecl, ...] = ()

    text: str = field(default="", compare=False, repr=False)

    def declaration(self, name: str) -> DataDecl:

        for declaration in self.declarations:

            if declaration.name == name:
                return declaration

        raise KeyError(name)

    def ordered_declarations(self) -> List[DataDecl]:
        """The declarations of the module sorted so that every declaration
        follows those it refers to, ties being broken by source order.

        Raises
        ------
        DiagnosticError
            With a MUTUAL_RECURSION diagnostic per declaration of a cycle.
        """
        return dependency_order(self.declarations)


def referenced_names(declaration: DataDecl) -> List[str]:
    """The distinct type constructors referenced by a declaration other than
    itself, in order of first occurrence."""

    names = []

    for constructor in declaration.constructors:
        for argument in (*constructor.domain, *constructor.indices):
            for node in walk(argument):

                if (
                    isinstance(node, TData)
                    and node.name != declaration.name
                    and node.name not in names
                ):
                    names.append(node.name)

    return names


def dependency_order(declarations) -> List[DataDecl]:

    by_name = {declaration.name: declaration for declaration in declarations}

    dependencies = {
        declaration.name: {
            name for name in referenced_names(declaration) if name in by_name
        }
        for declaration in declarations
    }

    ordered: List[DataDecl] = []
    placed: Set[str] = set()

    while len(ordered) < len(declarations):

        ready = [
            declaration
            for declaration in declarations
            if declaration.name not in placed
            and dependencies[declaration.name] <= placed
        ]

        if len(ready) == 0:
            break

        ordered.append(ready[0])
        placed.add(ready[0].name)

    remaining = [item for item in declarations if item.name not in placed]

    if len(remaining) > 0:

        names = ", ".join(item.name for item in remaining)

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.MUTUAL_RECURSION,
                    f"{item.name} is part of a group of mutually recursive "
                    f"declarations ({names})",
                    item.span,
                    declaration=item.name,
                )
                for item in remaining
            ]
        )

    return ordered


class _Resolver:
    """Resolves the names of the raw constructors of one declaration."""

    def __init__(self, declaration: RawDeclaration, arities: Dict[str, int]):

        self.declaration = declaration
        self.arities = arities

    def _error(self, code: DiagnosticCode, message: str, span) -> DiagnosticError:
        return DiagnosticError(
            [make_diagnostic(code, message, span, declaration=self.declaration.name)]
        )

    def _data(self, name: str, args, span, scope: Set[str]) -> TypeExpr:

        if name in scope:
            raise self._error(
                DiagnosticCode.ARITY_MISMATCH,
                f"the type variable {name} cannot be applied to arguments",
                span,
            )

        if name not in self.arities:
            raise self._error(
                DiagnosticCode.UNRESOLVED_NAME, f"unresolved name {name}", span
            )

        arity = self.arities[name]

        if arity != len(args):
            raise self._error(
                DiagnosticCode.ARITY_MISMATCH,
                f"{name} expects {arity} argument(s) but was given {len(args)}",
                span,
            )

        return TData(name, tuple(self.type_expr(arg, scope) for arg in args), span)

    def type_expr(self, raw: RawType, scope: Set[str]) -> TypeExpr:

        if isinstance(raw, RawUnit):
            return TUnit(raw.span)

        if isinstance(raw, RawName):

            if raw.name in scope:
                return TVar(raw.name, raw.span)

            return self._data(raw.name, (), raw.span, scope)

        if isinstance(raw, RawApp):
            return self._data(raw.head, raw.args, raw.span, scope)

        if isinstance(raw, RawProduct):
            return TProduct(
                self.type_expr(raw.left, scope),
                self.type_expr(raw.right, scope),
                raw.span,
            )
        if isinstance(raw, RawSum):
            return TSum(
                self.type_expr(raw.left, scope),
                self.type_expr(raw.right, scope),
                raw.span,
            )
        if isinstance(raw, RawArrow):
            return TArrow(
                self.type_expr(raw.domain, scope),
                self.type_expr(raw.codomain, scope),
                raw.span,
            )

        raise NotImplementedError()

    def constructor(self, raw: RawConstructor) -> ConstructorDecl:

        names = [binder.name for binder in raw.binders]

        duplicates = sorted({name for name in names if names.count(name) > 1})

        if len(duplicates) > 0:
            raise self._error(
                DiagnosticCode.DUPLICATE_DECLARATION,
                f"the binder(s) {', '.join(duplicates)} of {raw.name} are declared "
                f"more than once",
                raw.span,
            )

        type_expr = self.type_expr(raw.type, set(names))

        domain = []

        while isinstance(type_expr, TArrow):
            domain.append(type_expr.domain)
            type_expr = type_expr.codomain

        if not (
            isinstance(type_expr, TData) and type_expr.name == self.declaration.name
        ):
            raise self._error(
                DiagnosticCode.RETURN_TYPE_MISMATCH,
                f"the constructor {raw.name} must return an instance of "
                f"{self.declaration.name}",
                type_expr.span,
            )

        return ConstructorDecl(
            raw.name, raw.binders, tuple(domain), type_expr.args, raw.span
        )

    def declaration_or_errors(self) -> Tuple[Optional[DataDecl], List[Diagnostic]]:

        constructors, diagnostics = [], []

        counts = defaultdict(int)

        for raw in self.declaration.constructors:

            counts[raw.name] += 1

            if counts[raw.name] == 2:
                diagnostics.append(
                    make_diagnostic(
                        DiagnosticCode.DUPLICATE_DECLARATION,
                        f"the constructor {raw.name} is declared more than once",
                        raw.span,
                        declaration=self.declaration.name,
                    )
                )

            try:
                constructors.append(self.constructor(raw))
            except DiagnosticError as error:
                diagnostics.extend(error.diagnostics)

        if len(diagnostics) > 0:
            return None, diagnostics

        declaration = DataDecl(
            self.declaration.name,
            self.declaration.arity,
            tuple(constructors),
            span=self.declaration.span,
        )

        return declaration, []


def _parse_raw(text: str) -> List[RawDeclaration]:

    try:
        return list(_grammar().parse_string(text, parse_all=True))

    except pp.ParseBaseException as error:

        offset = byte_offset(text, error.loc)

        raise DiagnosticError(
            [
                make_diagnostic(
                    DiagnosticCode.SYNTAX_ERROR,
                    f"syntax error: {error.msg}",
                    (offset, offset),
                )
            ]
        )


@functools.lru_cache()
def load_prelude() -> Tuple[DataDecl, ...]:
    """The declarations of the bundled prelude, ``Equal`` and ``List``."""
    return parse_module(read_data_file("prelude.gdt"), prelude=False).declarations


def parse_module(text: str, prelude: bool = True) -> SourceModule:
    """Parses a module and resolves the names it refers to.

    Type constructor names resolve to the declarations of the module itself,
    wherever they appear in it, then to the prelude and finally to the opaque
    builtin types. Every declaration keeps the byte spans of its source text.

    Parameters
    ----------
    text
        The source text of the module.
    prelude
        Whether names may resolve to the declarations of the prelude.

    Raises
    ------
    DiagnosticError
        With the SYNTAX_ERROR, UNRESOLVED_NAME, ARITY_MISMATCH,
        DUPLICATE_DECLARATION, RETURN_TYPE_MISMATCH and MUTUAL_RECURSION
        diagnostics found in the module.
    """

    raw_declarations = _parse_raw(text)

    prelude_declarations = load_prelude() if prelude else ()

    arities = {
        **BUILTIN_TYPES,
        **{item.name: item.arity for item in prelude_declarations},
        **{item.name: item.arity for item in raw_declarations},
    }

    declarations, diagnostics, seen = [], [], set()

    for raw in raw_declarations:

        if raw.name in seen:

            diagnostics.append(
                make_diagnostic(
                    DiagnosticCode.DUPLICATE_DECLARATION,
                    f"{raw.name} is declared more than once",
                    raw.span,
                    declaration=raw.name,
                )
            )
            continue

        seen.add(raw.name)

        declaration, errors = _Resolver(raw, arities).declaration_or_errors()
        diagnostics.extend(errors)

        if declaration is not None:
            declarations.append(declaration)

    if len(diagnostics) > 0:
        raise DiagnosticError(diagnostics)

    module = SourceModule(tuple(declarations), tuple(prelude_declarations), text)
    module.ordered_declarations()

    logger.debug(f"parsed a module of {len(declarations)} declaration(s)")

    return module
