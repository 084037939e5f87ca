"""Static checks of derived artifacts: constructor coverage, well scopedness
and structural descent of recursive calls."""
from collections import Counter
from dataclasses import fields
from typing import List, Set, Union

from deepind.library.core.declarations import DataDecl
from deepind.library.core.terms import (
    App,
    Case,
    Clause,
    Fst,
    FunctionDef,
    Lam,
    MapCall,
    PCon,
    Pi,
    Postulate,
    RuleDef,
    SelfCall,
    Sig,
    Snd,
    Term,
    Var,
    free_variables,
    pattern_variables,
)
from deepind.library.models.diagnostics import (
    Diagnostic,
    DiagnosticCode,
    make_diagnostic,
)


def _scrutinee_pattern(clause: Clause, constructors: Set[str]) -> Union[PCon, None]:

    for pattern in clause.patterns:

        if isinstance(pattern, PCon) and pattern.constructor in constructors:
            return pattern

    return None


def check_coverage(definition: FunctionDef, declaration: DataDecl) -> List[Diagnostic]:
    """Checks that a clause-per-constructor function matches every constructor
    of ``declaration`` exactly once."""

    constructors = {constructor.name for constructor in declaration.constructors}

    counts = Counter(
        pattern.constructor
        for pattern in (
            _scrutinee_pattern(clause, constructors) for clause in definition.clauses
        )
        if pattern is not None
    )

    diagnostics = []

    if sum(counts.values()) != len(definition.clauses):

        diagnostics.append(
            make_diagnostic(
                DiagnosticCode.COVERAGE_VIOLATION,
                f"a clause of {definition.name} does not match on a constructor "
                f"of {declaration.name}",
                declaration=declaration.name,
            )
        )

    for constructor in declaration.constructors:

        count = counts.get(constructor.name, 0)

        if count == 1:
            continue

        diagnostics.append(
            make_diagnostic(
                DiagnosticCode.COVERAGE_VIOLATION,
                f"{definition.name} has {count} clauses for the constructor "
                f"{constructor.name}, expected exactly one",
                constructor.span,
                declaration=declaration.name,
            )
        )

    return diagnostics


def _scope_violation(name: str, variables: Set[str], where: str) -> Diagnostic:

    return make_diagnostic(
        DiagnosticCode.SCOPE_VIOLATION,
        f"the {where} of {name} mentions the unbound variable(s) "
        + ", ".join(sorted(variables)),
    )


def check_scope(artifact) -> List[Diagnostic]:
    """Checks that a rule, function or postulate contains no free variables:
    signatures and statements must be closed and clause bodies may only refer
    to the variables bound by their patterns."""

    diagnostics = []

    if isinstance(artifact, RuleDef):

        variables = free_variables(artifact.statement)

        if len(variables) > 0:
            diagnostics.append(_scope_violation(artifact.name, variables, "statement"))

        for hypothesis in artifact.hypotheses:

            variables = free_variables(hypothesis.term)

            if len(variables) > 0:
                diagnostics.append(
                    _scope_violation(hypothesis.name, variables, "hypothesis")
                )

        return diagnostics

    variables = free_variables(artifact.signature)

    if len(variables) > 0:
        diagnostics.append(_scope_violation(artifact.name, variables, "signature"))

    if isinstance(artifact, Postulate):
        return diagnostics

    for index, clause in enumerate(artifact.clauses):

        bound = {
            name for pattern in clause.patterns for name in pattern_variables(pattern)
        }
        variables = free_variables(clause.body) - bound

        if len(variables) > 0:
            diagnostics.append(
                _scope_violation(artifact.name, variables, f"clause {index + 1}")
            )

    return diagnostics


class _DescentChecker:
    """Walks a clause body tracking the variables known to be structurally
    smaller than the clause's scrutinee."""

    def __init__(self, function: str, smaller: Set[str]):

        self.function = function
        self.smaller = set(smaller)

        self.violations: List[Term] = []

    def is_smaller(self, term: Term) -> bool:

        if isinstance(term, Var):
            return term.name in self.smaller
        if isinstance(term, (Fst, Snd)):
            return self.is_smaller(term.term)
        if isinstance(term, App):
            return self.is_smaller(term.head)

        return False

    def visit(self, term: Term, under_map: bool = False):

        if isinstance(term, SelfCall) and term.function == self.function:

            if (term.scrutinee is None and not under_map) or (
                term.scrutinee is not None and not self.is_smaller(term.scrutinee)
            ):
                self.violations.append(term)

        if isinstance(term, Lam) and under_map:
            self.smaller.add(term.binder)

        if isinstance(term, Case) and self.is_smaller(term.scrutinee):
            self.smaller.update(branch.binder for branch in term.branches)

        if isinstance(term, (SelfCall, MapCall)):

            inner = under_map or (
                term.scrutinee is not None and self.is_smaller(term.scrutinee)
            )

            for arg in term.args:
                self.visit(arg, inner)

            for child in (term.scrutinee, term.evidence):
                if child is not None:
                    self.visit(child, under_map)

            return

        if isinstance(term, Case):

            self.visit(term.scrutinee, under_map)

            for branch in term.branches:
                self.visit(branch.body, under_map)

            return

        if isinstance(term, (Pi, Sig, Lam)):

            if term.domain is not None:
                self.visit(term.domain, under_map)

            self.visit(term.body, under_map)
            return

        for value in (getattr(term, item.name) for item in fields(term)):

            if isinstance(value, Term):
                self.visit(value, under_map)

            elif isinstance(value, tuple):
                for item in value:
                    if isinstance(item, Term):
                        self.visit(item, under_map)


def check_descent(definition: FunctionDef) -> List[Diagnostic]:
    """Checks that every recursive call of a function is applied to a strict
    subterm of the constructor pattern of its clause.

    A partially applied recursive call, used as a predicate morphism, is only
    accepted as an argument of a map function applied to a strict subterm, the
    variables bound by the morphisms passed to it then being strict subterms
    too.
    """

    diagnostics = []

    for index, clause in enumerate(definition.clauses):

        smaller = {
            name
            for pattern in clause.patterns
            if isinstance(pattern, PCon)
            for name in pattern_variables(pattern)
        }

        checker = _DescentChecker(definition.name, smaller)
        checker.visit(clause.body)

        for _ in checker.violations:

            diagnostics.append(
                make_diagnostic(
                    DiagnosticCode.DESCENT_VIOLATION,
                    f"clause {index + 1} of {definition.name} calls "
                    f"{definition.name} on a term which is not a strict subterm of "
                    f"its constructor pattern",
                )
            )

    return diagnostics
