"""Small helpers for building expected terms by hand."""
from deepind.library.core.terms import (
    App,
    Arr,
    DataRefT,
    LiftRef,
    SetSort,
    Var,
    apply,
)


def v(name: str) -> Var:
    return Var(name)


def predicate_type(carrier: str) -> Arr:
    """``carrier -> Set``"""
    return Arr(Var(carrier), SetSort())


def lifted(name: str, *args) -> App:
    """``name^ args``"""
    return apply(LiftRef(name), *args)


def data(name: str, *args):
    return apply(DataRefT(name), *args)
