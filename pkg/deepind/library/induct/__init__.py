from deepind.library.induct.checks import check_coverage, check_descent, check_scope
from deepind.library.induct.hypotheses import (
    derive_hypotheses,
    derive_structural_hypotheses,
)
from deepind.library.induct.kt import KTWitness, derive_kt_witness
from deepind.library.induct.rules import derive_deep_rule, derive_structural_rule
from deepind.library.induct.simplify import simplify_structural
from deepind.library.induct.witness import synth_witness

__all__ = [
    check_coverage,
    check_descent,
    check_scope,
    derive_deep_rule,
    derive_hypotheses,
    derive_kt_witness,
    derive_structural_hypotheses,
    derive_structural_rule,
    KTWitness,
    simplify_structural,
    synth_witness,
]
