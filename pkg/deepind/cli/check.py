import click

from deepind.cli.utilities import format_table, generate_click_command
from deepind.library.core.environment import Environment
from deepind.library.lift import check_declaration
from deepind.library.syntax import parse_module
from deepind.library.utilities.exceptions import DiagnosticError


def check_command():
    def base_function(source: str, file_path: str):

        module = parse_module(source)
        environment = Environment.from_module(module)

        rows, diagnostics = [], []

        for declaration in module.declarations:

            declaration = environment[declaration.name]

            rows.append(
                (
                    declaration.name,
                    declaration.arity,
                    declaration.classification.value,
                    len(declaration.constructors),
                )
            )
            diagnostics.extend(check_declaration(declaration, environment))

        click.echo(
            format_table(("Name", "Arity", "Classification", "Constructors"), rows)
        )

        if len(diagnostics) > 0:
            raise DiagnosticError(diagnostics)

    return generate_click_command(
        click.command(
            "check",
            help="Parse and classify the declarations of FILE and check their "
            "constructors against the argument grammar.",
        ),
        [],
        base_function,
    )
