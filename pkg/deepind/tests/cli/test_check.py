import pytest

from deepind.cli import cli


@pytest.mark.parametrize(
    "file_name, expected_rows",
    [
        ("seq", [("Seq", "1", "GADT", "2")]),
        ("lterm", [("LType", "1", "GADT", "3"), ("LTerm", "1", "GADT", "4")]),
        ("rose", [("Rose", "1", "ADT", "2")]),
        ("ptree", [("PTree", "1", "NestedType", "2")]),
        ("bush", [("Bush", "1", "TrulyNestedType", "2")]),
    ],
)
def test_check(runner, file_name, expected_rows):

    result = runner.invoke(cli, ["check", f"corpus/{file_name}.gdt"])

    if result.exit_code != 0:
        raise result.exception

    lines = result.output.splitlines()

    assert lines[0].split() == ["Name", "Arity", "Classification", "Constructors"]
    assert [tuple(line.split()) for line in lines[2:]] == expected_rows


def test_check_truly_nested_gadt(runner):

    result = runner.invoke(cli, ["check", "corpus/nested_gadt.gdt"])

    assert result.exit_code == 1
    assert "TrulyNestedGADT" in result.output
    assert "nested_gadt.gdt" in result.output
    assert "error[TRULY_NESTED_GADT]" in result.output


def test_check_syntax_error(runner):

    with open("invalid.gdt", "w") as file:
        file.write("data Seq : Set -> Set where\n  const : forall {A : Set} . A ->\n")

    result = runner.invoke(cli, ["check", "invalid.gdt"])

    assert result.exit_code == 1
    assert "invalid.gdt:" in result.output
    assert "error[SYNTAX_ERROR]" in result.output


def test_check_grammar_violation(runner):

    with open("nested.gdt", "w") as file:
        file.write(
            "data T : Set -> Set where\n"
            "  c : forall {A : Set} . Equal (T A) A -> T A\n"
        )

    result = runner.invoke(cli, ["check", "nested.gdt"])

    assert result.exit_code == 1
    assert "error[H_IS_GADT]" in result.output


def test_check_missing_file(runner):

    result = runner.invoke(cli, ["check", "missing.gdt"])
    assert result.exit_code == 2
