from deepind.library.interp.enumeration import (
    Enumerator,
    encoded_environment,
    enumerate_values,
)
from deepind.library.interp.evaluate import LiftingEvaluator, eval_lifting
from deepind.library.interp.model import FinModel
from deepind.library.interp.oracle import LeafOracle, leaf_oracle
from deepind.library.interp.suite import (
    CheckKind,
    CheckResult,
    SuiteReport,
    run_suite,
)
from deepind.library.interp.values import Table, all_tables, always_true

__all__ = [
    all_tables,
    always_true,
    CheckKind,
    CheckResult,
    encoded_environment,
    enumerate_values,
    Enumerator,
    eval_lifting,
    FinModel,
    leaf_oracle,
    LeafOracle,
    LiftingEvaluator,
    run_suite,
    SuiteReport,
    Table,
]
