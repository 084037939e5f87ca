import click

from deepind.cli.utilities import generate_click_command
from deepind.library.core.environment import Environment
from deepind.library.encode import henry_ford
from deepind.library.syntax import parse_module, print_declaration
from deepind.library.utilities.exceptions import DiagnosticError


def encode_command():
    def base_function(source: str, file_path: str):

        module = parse_module(source)
        environment = Environment.from_module(module)

        reserved = [declaration.name for declaration in environment]

        blocks, diagnostics = [], []

        for declaration in module.declarations:

            try:
                encoded = henry_ford(environment[declaration.name])
            except DiagnosticError as error:
                diagnostics.extend(error.diagnostics)
                continue

            blocks.append(print_declaration(encoded, reserved, normalize=False))

        if len(blocks) > 0:
            click.echo("\n\n".join(blocks))

        if len(diagnostics) > 0:
            raise DiagnosticError(diagnostics)

    return generate_click_command(
        click.command(
            "encode",
            help="Print the Henry Ford encoding of every declaration of FILE.",
        ),
        [],
        base_function,
    )
