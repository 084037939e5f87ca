import pytest

from deepind.library.core.types import TArrow, TData, TProduct, TVar
from deepind.library.interp import CheckKind, FinModel, SuiteReport, run_suite
from deepind.library.interp.suite import ground_types, index_instances
from deepind.tests.utilities.corpus import load_corpus_environment

BOOL = TData("Bool")


def test_index_instances(seq_environment):

    expected = [(TVar("A"),), (TProduct(TVar("A"), TVar("A")),)]

    assert index_instances(seq_environment["Seq"]) == expected
    assert index_instances(seq_environment["Seq"], seq_environment) == expected


def test_index_instances_adt():

    environment = load_corpus_environment("rose")
    assert index_instances(environment["Rose"], environment) == [(TVar("A"),)]


def test_ground_types(lterm_environment):

    assert ground_types(lterm_environment["LTerm"], lterm_environment) == [BOOL]
    assert ground_types(lterm_environment["LType"], lterm_environment) == [BOOL]


def test_index_instances_ground(lterm_environment):

    assert index_instances(lterm_environment["LTerm"], lterm_environment) == [
        (TVar("A"),),
        (TArrow(TVar("A"), TVar("A")),),
        (TData("List", (TVar("A"),)),),
        (BOOL,),
        (TArrow(BOOL, BOOL),),
        (TData("List", (BOOL,)),),
    ]


@pytest.mark.parametrize("file_name", ["seq", "seq_structured", "list", "ptree"])
def test_run_suite(file_name, small_model):

    report = run_suite(load_corpus_environment(file_name), small_model)

    assert report.passed
    assert len(report.results) > 0

    statuses = {result.status for result in report.results}
    assert statuses == {"passed"}

    checks = {result.check for result in report.results}

    assert CheckKind.HENRY_FORD_COUNTS in checks
    assert CheckKind.KT_INHABITATION in checks
    assert CheckKind.ORACLE_EQUIVALENCE in checks
    assert CheckKind.INSTANCE_COVERAGE in checks


def test_run_suite_lterm(lterm_environment):
    """LTerm is uninhabited at an abstract index, so the oracle can only be
    consulted at the ground instances."""

    report = run_suite(lterm_environment, FinModel(), names=["LTerm"])

    assert report.passed

    checked = {
        result.instance: result.cases
        for result in report.results
        if result.check == CheckKind.ORACLE_EQUIVALENCE and result.skipped is None
    }

    assert checked.get("LTerm A", 0) == 0
    assert checked["LTerm Bool"] > 0
    assert checked["LTerm (Bool -> Bool)"] > 0

    kt_cases = sum(
        result.cases
        for result in report.results
        if result.check == CheckKind.KT_INHABITATION and result.skipped is None
    )
    assert kt_cases > 0

    (coverage,) = [
        result
        for result in report.results
        if result.check == CheckKind.INSTANCE_COVERAGE
    ]

    assert coverage.status == "passed"
    assert coverage.cases == sum(checked.values())


def test_run_suite_monotonicity(small_model):

    report = run_suite(load_corpus_environment("list"), small_model)

    assert any(
        result.check == CheckKind.MONOTONICITY and result.cases > 0
        for result in report.results
    )


def test_run_suite_names(seq_environment, small_model):

    report = run_suite(seq_environment, small_model, names=["Seq"])
    assert {result.declaration for result in report.results} == {"Seq"}

    instances = {
        result.instance
        for result in report.results
        if result.check != CheckKind.INSTANCE_COVERAGE
    }
    assert instances == {"Seq A", "Seq (A * A)"}


def test_run_suite_skips_truly_nested_gadt(small_model):

    report = run_suite(load_corpus_environment("nested_gadt"), small_model)

    assert report.passed
    assert all(result.status == "skipped" for result in report.results)


def test_run_suite_table_cap(seq_environment):
    """A sweep in which every oracle check was skipped fails."""

    model = FinModel(carrier_size=2, depth=2, table_cap=1)
    report = run_suite(seq_environment, model)

    skipped = [
        result
        for result in report.results
        if result.check == CheckKind.ORACLE_EQUIVALENCE
    ]

    assert len(skipped) > 0
    assert all(result.status == "skipped" for result in skipped)

    assert not report.passed

    (coverage,) = [
        result
        for result in report.results
        if result.check == CheckKind.INSTANCE_COVERAGE
    ]

    assert coverage.status == "failed"
    assert coverage.cases == 0
    assert coverage.failures[0].startswith("no instance of Seq was checked")


def test_suite_report_summary(small_model):

    report = run_suite(load_corpus_environment("list"), small_model)
    summary = report.summary()

    assert len(summary) == len(report.results)
    assert summary[0][:4] == ("List", "List A", "henry-ford-counts", "passed")
    assert summary[-1][:4] == ("List", "List", "instance-coverage", "passed")


def test_suite_report_to_file(tmpdir, small_model):

    report = run_suite(load_corpus_environment("list"), small_model)

    file_path = str(tmpdir.join("report.json"))
    report.to_file(file_path)

    assert SuiteReport.parse_file(file_path) == report
