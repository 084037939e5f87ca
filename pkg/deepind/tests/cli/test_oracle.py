import mock
import pytest

from deepind.cli import cli
from deepind.library.interp import CheckKind, CheckResult, FinModel, SuiteReport


@pytest.mark.parametrize("file_name", ["seq", "list", "ptree"])
def test_oracle(runner, file_name):

    result = runner.invoke(
        cli, ["oracle", f"corpus/{file_name}.gdt", "--carrier", "2", "--depth", "2"]
    )

    if result.exit_code != 0:
        raise result.exception

    lines = result.output.splitlines()

    assert lines[0].split() == ["Declaration", "Instance", "Check", "Status", "Cases"]
    assert "failed" not in result.output


def test_oracle_report(runner):

    result = runner.invoke(
        cli,
        [
            "oracle",
            "corpus/seq.gdt",
            "--carrier",
            "2",
            "--depth",
            "2",
            "--report",
            "report.json",
        ],
    )

    if result.exit_code != 0:
        raise result.exception

    report = SuiteReport.parse_file("report.json")

    assert report.passed
    assert report.model.carrier_size == 2
    assert {item.declaration for item in report.results} == {"Seq"}


def test_oracle_lterm(runner):

    result = runner.invoke(
        cli,
        ["oracle", "corpus/lterm.gdt", "--decl", "LTerm", "--report", "report.json"],
    )

    if result.exit_code != 0:
        raise result.exception

    report = SuiteReport.parse_file("report.json")

    checked = sum(
        item.cases
        for item in report.results
        if item.check == CheckKind.ORACLE_EQUIVALENCE and item.status == "passed"
    )

    assert report.passed
    assert checked > 0


def test_oracle_table_cap(runner):
    """Every oracle check is skipped, so the coverage of List fails."""

    result = runner.invoke(
        cli,
        ["oracle", "corpus/list.gdt", "--carrier", "2", "--depth", "2"]
        + ["--table-cap", "1"],
    )

    assert result.exit_code == 1

    assert "skipped" in result.output
    assert "instance-coverage failed for List:" in result.output


@pytest.mark.parametrize(
    "arguments",
    [
        ["--carrier", "0"],
        ["--carrier", "4"],
        ["--depth", "0"],
        ["--decl", "Missing"],
    ],
)
def test_oracle_usage_error(runner, arguments):

    result = runner.invoke(cli, ["oracle", "corpus/seq.gdt", *arguments])
    assert result.exit_code == 2


def test_oracle_failure(runner):

    report = SuiteReport(
        model=FinModel(carrier_size=2, depth=2),
        results=[
            CheckResult(
                declaration="Seq",
                instance="Seq A",
                check=CheckKind.ORACLE_EQUIVALENCE,
                cases=2,
                failures=["{a0} (const a1)"],
            )
        ],
    )

    with mock.patch("deepind.cli.oracle.run_suite", return_value=report):
        result = runner.invoke(cli, ["oracle", "corpus/seq.gdt"])

    assert result.exit_code == 1
    assert "oracle-equivalence failed for Seq A:" in result.output
    assert "  {a0} (const a1)" in result.output
