import os
from typing import List, Sequence

import click

from deepind.library.config import settings
from deepind.library.utilities.exceptions import CapExceededError, DiagnosticError
from deepind.library.utilities.logging import (
    get_log_levels,
    setup_timestamp_logging,
    string_to_log_level,
)


def common_options() -> List[click.option]:

    return [
        click.option(
            "--log-level",
            default="warning",
            type=click.Choice(get_log_levels()),
            help="The verbosity of the logger.",
            show_default=True,
        ),
    ]


def report_diagnostics(diagnostics, source: str, file_path: str):
    """Renders diagnostics to the standard error stream."""

    for diagnostic in diagnostics:

        click.echo(
            diagnostic.render(source, os.path.basename(file_path), settings.COLOR),
            err=True,
        )


def generate_click_command(
    command_decorator: click.command,
    option_decorators: List[click.option],
    inner_function,
):
    """Generates a full ``click`` command which reads the declaration file
    passed as its argument.

    The inner function is called with the text of the file as ``source`` and
    the path of the file as ``file_path``. Any diagnostics it raises are
    rendered to the standard error stream and the command exits with code 1.

    Parameters
    ----------
    command_decorator
        The main command decorator
    option_decorators
        The option decorators
    inner_function
        The inner function of the command
    """

    click_options = [
        click.argument(
            "file_path", type=click.Path(exists=True, dir_okay=False), metavar="FILE"
        ),
        *common_options(),
        *option_decorators,
    ]

    def wrapped_function(**kwargs):

        log_level = kwargs.pop("log_level")

        # Set up logging if requested.
        logging_level = string_to_log_level(log_level)

        if logging_level is not None:
            setup_timestamp_logging(logging_level)

        file_path = kwargs["file_path"]

        with open(file_path, encoding="utf-8") as file:
            source = file.read()

        try:
            inner_function(source=source, **kwargs)
        except DiagnosticError as error:
            report_diagnostics(error.diagnostics, source, file_path)
            raise SystemExit(1)
        except CapExceededError as error:
            report_diagnostics([error.to_diagnostic()], source, file_path)
            raise SystemExit(1)

    click_function = wrapped_function

    click_decorators = [command_decorator, *click_options]

    for click_decorator in reversed(click_decorators):
        click_function = click_decorator(click_function)

    return click_function


def format_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Formats rows as a plain text table with left aligned columns."""

    cells = [[str(item) for item in row] for row in [header, *rows]]

    widths = [max(len(row[index]) for row in cells) for index in range(len(header))]

    lines = [
        "  ".join(item.ljust(width) for item, width in zip(row, widths)).rstrip()
        for row in cells
    ]
    lines.insert(1, "  ".join("-" * width for width in widths))

    return "\n".join(lines)
