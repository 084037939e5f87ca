from typing import List, Optional, Tuple

import click
from click_option_group import optgroup

from deepind.cli.utilities import format_table, generate_click_command
from deepind.library.config import settings
from deepind.library.core.environment import Environment
from deepind.library.interp import FinModel, run_suite
from deepind.library.syntax import parse_module


def _oracle_options() -> List[click.option]:

    return [
        click.option(
            "--decl",
            "declaration_names",
            multiple=True,
            type=click.STRING,
            help="A declaration to check. May be repeated. By default every "
            "declaration of the file is checked.",
        ),
        click.option(
            "--report",
            "report_path",
            default=None,
            type=click.Path(dir_okay=False),
            help="The path to save the full JSON report to.",
        ),
        optgroup.group("Finite model", help="The bounds of the finite model."),
        optgroup.option(
            "--carrier",
            "carrier_size",
            default=settings.CARRIER_SIZE,
            type=click.IntRange(1, settings.CARRIER_CAP),
            help="The number of atoms of each type variable.",
            show_default=True,
        ),
        optgroup.option(
            "--depth",
            default=settings.DEPTH,
            type=click.IntRange(1),
            help="The maximum number of nested constructors of enumerated values.",
            show_default=True,
        ),
        optgroup.option(
            "--function-cap",
            default=settings.FUNCTION_CAP,
            type=click.IntRange(1),
            help="The largest function space which may be enumerated.",
            show_default=True,
        ),
        optgroup.option(
            "--table-cap",
            default=settings.TABLE_CAP,
            type=click.IntRange(1),
            help="The largest number of predicate tables which may be searched.",
            show_default=True,
        ),
    ]


def oracle_command():
    def base_function(
        source: str,
        file_path: str,
        declaration_names: Tuple[str, ...],
        carrier_size: int,
        depth: int,
        function_cap: int,
        table_cap: int,
        report_path: Optional[str],
    ):

        module = parse_module(source)
        environment = Environment.from_module(module)

        for name in declaration_names:

            if name not in environment.module_names:

                raise click.BadParameter(
                    f"{name} is not declared in {file_path}", param_hint="--decl"
                )

        model = FinModel(
            carrier_size=carrier_size,
            depth=depth,
            function_cap=function_cap,
            table_cap=table_cap,
        )

        report = run_suite(
            environment,
            model,
            None if len(declaration_names) == 0 else declaration_names,
        )

        click.echo(
            format_table(
                ("Declaration", "Instance", "Check", "Status", "Cases"),
                report.summary(),
            )
        )

        if report_path is not None:
            report.to_file(report_path)

        failed = [result for result in report.results if result.status == "failed"]

        for result in failed:

            click.echo(
                f"{result.check.value} failed for {result.instance}:", err=True
            )

            for failure in result.failures:
                click.echo(f"  {failure}", err=True)

        if len(failed) > 0:
            raise SystemExit(1)

    return generate_click_command(
        click.command(
            "oracle",
            help="Run the differential suite on the declarations of FILE in a "
            "finite model.",
        ),
        _oracle_options(),
        base_function,
    )
