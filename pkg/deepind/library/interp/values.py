"""The values of the finite set interpretation of types and the predicates on
them."""
import itertools
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterator, Sequence, Tuple

from deepind.library.core.types import TypeExpr
from deepind.library.utilities.exceptions import CapExceededError


@dataclass(frozen=True)
class Value:
    """The base class of all values."""


@dataclass(frozen=True)
class Atom(Value):
    """The ``index``-th element of the carrier (or opaque builtin type)
    called ``carrier``."""

    carrier: str
    index: int

    def __str__(self):
        return f"{self.carrier.lower()}{self.index}"


@dataclass(frozen=True)
class UnitValue(Value):
    def __str__(self):
        return "tt"


@dataclass(frozen=True)
class PairValue(Value):

    left: Value
    right: Value

    def __str__(self):
        return f"({self.left}, {self.right})"


@dataclass(frozen=True)
class FunctionValue(Value):
    """A function given by its graph."""

    graph: Tuple[Tuple[Value, Value], ...]

    def __call__(self, argument: Value) -> Value:

        for domain_value, codomain_value in self.graph:

            if domain_value == argument:
                return codomain_value

        raise KeyError(argument)

    def __str__(self):
        return "{" + ", ".join(f"{a} -> {b}" for a, b in self.graph) + "}"


@dataclass(frozen=True)
class Con(Value):
    """A constructor applied to the types instantiating its index binders and
    to its arguments. Sums are represented by the constructors ``inl`` and
    ``inr`` and the proofs of equality by ``refl``."""

    constructor: str
    types: Tuple[TypeExpr, ...] = ()
    args: Tuple[Value, ...] = ()

    def __str__(self):

        if len(self.args) == 0:
            return self.constructor

        return f"({' '.join([self.constructor, *(str(arg) for arg in self.args)])})"


UNIT = UnitValue()
REFL = Con("refl")

Predicate = Callable[[Value], bool]


@dataclass(frozen=True)
class Table:
    """A boolean predicate given by the set of values it holds for."""

    truths: FrozenSet[Value]

    def __call__(self, value: Value) -> bool:
        return value in self.truths


def always_true(_: Value) -> bool:
    """The constantly true predicate ``K_T``."""
    return True


def all_tables(carrier: Sequence[Value], cap: int) -> Iterator[Table]:
    """Yields every predicate table on a finite carrier, starting from the
    everywhere false table.

    Raises
    ------
    CapExceededError
        If the carrier admits more than ``cap`` tables.
    """

    count = 2 ** len(carrier)

    if count > cap:
        raise CapExceededError("set of predicate tables", count, cap)

    for choices in itertools.product([False, True], repeat=len(carrier)):
        yield Table(
            frozenset(value for value, chosen in zip(carrier, choices) if chosen)
        )
