"""The differential suite which compares derived liftings against the leaf
oracle, and the Henry Ford encoding against the declarations as written, in a
finite model."""
import itertools
import logging
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from deepind.library.core.declarations import Classification, DataDecl
from deepind.library.core.environment import Environment
from deepind.library.core.types import TData, TVar, TypeExpr, substitute, walk
from deepind.library.core.types import free_variables as type_variables
from deepind.library.encode import encode_constructor
from deepind.library.interp.enumeration import (
    Enumerator,
    encoded_environment,
    type_universe,
)
from deepind.library.interp.evaluate import LiftingEvaluator
from deepind.library.interp.model import FinModel
from deepind.library.interp.oracle import leaf_oracle
from deepind.library.interp.values import Table, Value, always_true, all_tables
from deepind.library.lift import LiftingRegistry
from deepind.library.lift.maps import is_mappable
from deepind.library.models.models import BaseModelWithFile
from deepind.library.models.validators.string import IdentifierStr, NonEmptyStr
from deepind.library.syntax.printer import print_type
from deepind.library.utilities.exceptions import CapExceededError

logger = logging.getLogger(__name__)

_MAXIMUM_FAILURES = 5

Assignment = Tuple[Table, ...]


class CheckKind(Enum):

    ORACLE_EQUIVALENCE = "oracle-equivalence"
    KT_INHABITATION = "kt-inhabitation"
    HENRY_FORD_COUNTS = "henry-ford-counts"
    MONOTONICITY = "monotonicity"
    INSTANCE_COVERAGE = "instance-coverage"


class CheckResult(BaseModel):
    """The outcome of one check of the suite on one instance of a
    declaration."""

    class Config:
        allow_mutation = False
        extra = "forbid"

    declaration: IdentifierStr = Field(..., description="The checked declaration.")
    instance: NonEmptyStr = Field(
        ..., description="The instance of the declaration, e.g. ``Seq (A * A)``."
    )
    check: CheckKind = Field(..., description="The property which was checked.")

    cases: int = Field(0, description="The number of cases which were checked.")
    failures: List[str] = Field(
        default_factory=list,
        description="A description of the first few counterexamples found.",
    )
    skipped: Optional[str] = Field(
        None, description="Why the check could not be run, if it was not."
    )

    @property
    def status(self) -> str:

        if self.skipped is not None:
            return "skipped"

        return "failed" if len(self.failures) > 0 else "passed"


class SuiteReport(BaseModelWithFile):
    """The results of running the differential suite in a finite model."""

    model: FinModel = Field(..., description="The model the suite was run in.")
    results: List[CheckResult] = Field(
        default_factory=list, description="The result of each check."
    )

    @property
    def passed(self) -> bool:
        """Whether no check found a counterexample. A skipped check does not
        count as a failure, but a declaration none of whose instances could be
        checked against the leaf oracle fails its instance coverage check."""
        return all(result.status != "failed" for result in self.results)

    def summary(self) -> List[Tuple[str, str, str, str, int]]:
        """One ``(declaration, instance, check, status, cases)`` row per
        result."""
        return [
            (
                result.declaration,
                result.instance,
                result.check.value,
                result.status,
                result.cases,
            )
            for result in self.results
        ]


def _constrained(declaration: DataDecl) -> Iterator[Tuple[int, TypeExpr]]:
    """Yields the position and right hand side of every equality constraint of
    the Henry Ford encoded constructors of a declaration."""

    for constructor in declaration.constructors:

        encoded = encode_constructor(constructor)
        positions = {
            index.name: position for position, index in enumerate(encoded.indices)
        }

        for variable, index in encoded.constraints:
            yield positions[variable], index


def _referenced(declaration: DataDecl, environment: Environment) -> List[DataDecl]:
    """The declaration followed by every declaration its constructors refer to,
    directly or through other declarations."""

    found, pending = [declaration], [declaration]

    while len(pending) > 0:

        for constructor in pending.pop().constructors:
            for argument in constructor.domain:
                for node in walk(argument):

                    if not isinstance(node, TData) or node.name not in environment:
                        continue

                    referenced = environment[node.name]

                    if referenced not in found:

                        found.append(referenced)
                        pending.append(referenced)

    return found


def ground_types(declaration: DataDecl, environment: Environment) -> List[TypeExpr]:
    """The closed types which the constructors of a declaration, or of the
    declarations it refers to, constrain an index to be equal to, e.g. ``Bool``
    for ``LTerm`` through ``bool : Equal A Bool -> LType A``."""

    grounds = []

    for referenced in _referenced(declaration, environment):
        for _, index in _constrained(referenced):

            if len(type_variables(index)) == 0 and index not in grounds:
                grounds.append(index)

    return grounds


def index_instances(
    declaration: DataDecl,
    environment: Optional[Environment] = None,
    base: TypeExpr = TVar("A"),
) -> List[Tuple[TypeExpr, ...]]:
    """The index types a declaration is checked at.

    Per index these are the ``base`` type and every type the constructors
    constrain the index to be equal to with its variables replaced by ``base``,
    e.g. ``Seq A`` and ``Seq (A * A)``. When an environment is given the same
    is repeated with ``base`` replaced by each of the ``ground_types`` of the
    declaration, so that a GADT such as ``LTerm``, which is uninhabited at an
    abstract index, is also checked at ``LTerm Bool`` and
    ``LTerm (Bool -> Bool)``.
    """

    fillers = [base]

    if environment is not None:
        fillers.extend(ground_types(declaration, environment))

    candidates: List[List[TypeExpr]] = [[] for _ in range(declaration.arity)]

    def add(position: int, instance: TypeExpr):

        if instance not in candidates[position]:
            candidates[position].append(instance)

    for filler in fillers:

        for position in range(declaration.arity):
            add(position, filler)

        for position, index in _constrained(declaration):
            add(
                position,
                substitute(index, {name: filler for name in type_variables(index)}),
            )

    return list(itertools.product(*candidates))


def _describe(assignment: Assignment) -> str:
    return ", ".join(
        "{" + ", ".join(sorted(str(value) for value in table.truths)) + "}"
        for table in assignment
    )


def _assignments(carriers: Sequence[Sequence[Value]], cap: int) -> List[Assignment]:

    count = 1

    for carrier in carriers:
        count *= 2 ** len(carrier)

    if count > cap:
        raise CapExceededError("set of predicate assignments", count, cap)

    return list(
        itertools.product(*(list(all_tables(carrier, cap)) for carrier in carriers))
    )


class _InstanceChecks:
    """Runs every check of the suite on one instance of a declaration."""

    def __init__(
        self,
        declaration: DataDecl,
        types: Tuple[TypeExpr, ...],
        environment: Environment,
        model: FinModel,
    ):

        self.declaration = declaration
        self.types = types
        self.instance = TData(declaration.name, types)

        self.environment = environment
        self.encoded = encoded_environment(environment)
        self.model = model

        self.universe = type_universe(self.instance, self.encoded)

        self.enumerator = Enumerator(self.encoded, model, self.universe)
        self.evaluator = LiftingEvaluator(
            LiftingRegistry(environment), self.enumerator
        )

        self.truths: Dict[Tuple[Assignment, Value], bool] = {}

    def _result(self, check: CheckKind, **kwargs) -> CheckResult:
        return CheckResult(
            declaration=self.declaration.name,
            instance=print_type(self.instance),
            check=check,
            **kwargs,
        )

    def _skipped(self, check: CheckKind, error: CapExceededError) -> CheckResult:
        return self._result(check, skipped=str(error))

    def henry_ford_counts(self) -> CheckResult:

        check = CheckKind.HENRY_FORD_COUNTS

        try:
            written = Enumerator(self.environment, self.model, self.universe).values(
                self.instance
            )
            encoded = self.enumerator.values(self.instance)
        except CapExceededError as error:
            return self._skipped(check, error)

        failures = (
            []
            if len(written) == len(encoded)
            else [f"{len(written)} value(s) as written, {len(encoded)} encoded"]
        )

        return self._result(check, cases=len(encoded), failures=failures)

    def kt_inhabitation(self, values: Sequence[Value]) -> CheckResult:

        check = CheckKind.KT_INHABITATION

        predicates = [always_true] * self.declaration.arity
        failures = []

        try:

            for value in values:

                if not self.evaluator.holds(
                    self.declaration.name, self.types, predicates, value
                ):
                    failures.append(str(value))

        except CapExceededError as error:
            return self._skipped(check, error)

        return self._result(
            check, cases=len(values), failures=failures[:_MAXIMUM_FAILURES]
        )

    def oracle_equivalence(
        self, values: Sequence[Value], assignments: Sequence[Assignment]
    ) -> CheckResult:

        check = CheckKind.ORACLE_EQUIVALENCE
        failures = []

        try:

            for assignment in assignments:
                for value in values:

                    lifted = self.evaluator.holds(
                        self.declaration.name, self.types, assignment, value
                    )
                    expected = leaf_oracle(
                        self.declaration,
                        self.types,
                        assignment,
                        value,
                        self.enumerator,
                    )

                    self.truths[(assignment, value)] = lifted

                    if lifted != expected:
                        failures.append(
                            f"{value} at {_describe(assignment)}: the lifting "
                            f"gives {lifted} but the leaves give {expected}"
                        )

        except CapExceededError as error:
            return self._skipped(check, error)

        return self._result(
            check,
            cases=len(values) * len(assignments),
            failures=failures[:_MAXIMUM_FAILURES],
        )

    def monotonicity(
        self,
        values: Sequence[Value],
        assignments: Sequence[Assignment],
        carriers: Sequence[Sequence[Value]],
    ) -> CheckResult:
        """Checks that enlarging any single predicate table by one element
        never falsifies the lifting, using the truths recorded by the oracle
        equivalence check."""

        failures = []
        cases = 0

        for assignment in assignments:
            for position, carrier in enumerate(carriers):
                for item in carrier:

                    if assignment[position](item):
                        continue

                    larger = (
                        *assignment[:position],
                        Table(assignment[position].truths | {item}),
                        *assignment[position + 1 :],
                    )

                    for value in values:

                        cases += 1

                        if self.truths[(assignment, value)] and not (
                            self.truths[(larger, value)]
                        ):
                            failures.append(
                                f"{value} holds at {_describe(assignment)} but "
                                f"not at {_describe(larger)}"
                            )

        return self._result(
            CheckKind.MONOTONICITY,
            cases=cases,
            failures=failures[:_MAXIMUM_FAILURES],
        )

    def run(self) -> List[CheckResult]:

        logger.debug(f"checking {print_type(self.instance)}")

        results = [self.henry_ford_counts()]

        try:
            values = self.enumerator.values(self.instance)
        except CapExceededError as error:
            return [
                *results,
                self._skipped(CheckKind.KT_INHABITATION, error),
                self._skipped(CheckKind.ORACLE_EQUIVALENCE, error),
            ]

        results.append(self.kt_inhabitation(values))

        try:
            carriers = [self.enumerator.values(index) for index in self.types]
            assignments = _assignments(carriers, self.model.table_cap)
        except CapExceededError as error:
            return [*results, self._skipped(CheckKind.ORACLE_EQUIVALENCE, error)]

        equivalence = self.oracle_equivalence(values, assignments)
        results.append(equivalence)

        if equivalence.skipped is None and is_mappable(self.declaration):
            results.append(self.monotonicity(values, assignments, carriers))

        return results


def _instance_coverage(name: str, results: List[CheckResult]) -> CheckResult:
    """Fails unless at least one instance of a declaration was checked against
    the leaf oracle on at least one case."""

    cases = sum(
        result.cases
        for result in results
        if result.check == CheckKind.ORACLE_EQUIVALENCE and result.skipped is None
    )

    failures = (
        []
        if cases > 0
        else [
            f"no instance of {name} was checked against the leaf oracle, every "
            f"instance was either skipped or uninhabited in the model"
        ]
    )

    return CheckResult(
        declaration=name,
        instance=name,
        check=CheckKind.INSTANCE_COVERAGE,
        cases=cases,
        failures=failures,
    )


def _skip_reason(declaration: DataDecl) -> Optional[str]:

    if declaration.arity == 0:
        return f"{declaration.name} has no indices"

    if declaration.classification == Classification.TRULY_NESTED_GADT:
        return f"the truly nested GADT {declaration.name} has no lifting"

    return None


def run_suite(
    environment: Environment,
    model: Optional[FinModel] = None,
    names: Optional[Iterable[str]] = None,
) -> SuiteReport:
    """Runs the differential suite on declarations of an environment.

    For every declaration and each of its ``index_instances`` the suite checks
    that

    * enumerating the declaration as written and its Henry Ford encoding yields
      the same number of values,
    * the lifting holds for every value when every predicate is constantly
      true,
    * the lifting agrees with the leaf oracle for every value and every
      assignment of predicate tables,
    * and, for declarations with a lift map, that the lifting is monotone in
      its predicates.

    Checks which would exceed a cap of the model are reported as skipped. A
    declaration fails when no instance could be checked against the oracle.

    Parameters
    ----------
    environment
        The environment containing the declarations.
    model
        The finite model, by default one built from the settings.
    names
        The declarations to check, by default those of the module itself.
    """

    model = FinModel() if model is None else model
    names = environment.module_names if names is None else list(names)

    results = []

    for name in names:

        declaration = environment[name]
        reason = _skip_reason(declaration)

        if reason is not None:

            logger.info(f"skipping {name}: {reason}")

            results.extend(
                CheckResult(
                    declaration=name, instance=name, check=check, skipped=reason
                )
                for check in (
                    CheckKind.HENRY_FORD_COUNTS,
                    CheckKind.KT_INHABITATION,
                    CheckKind.ORACLE_EQUIVALENCE,
                )
            )
            continue

        instance_results = [
            result
            for types in index_instances(declaration, environment)
            for result in _InstanceChecks(declaration, types, environment, model).run()
        ]

        results.extend(instance_results)
        results.append(_instance_coverage(name, instance_results))

    report = SuiteReport(model=model, results=results)

    logger.debug(
        f"ran {len(report.results)} check(s), "
        f"{'all passed' if report.passed else 'some failed'}"
    )

    return report
