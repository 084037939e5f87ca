import click

from deepind.cli.check import check_command
from deepind.cli.derive import derive_command
from deepind.cli.encode import encode_command
from deepind.cli.oracle import oracle_command


@click.group()
def cli():
    """The root group for all CLI commands."""


cli.add_command(check_command())
cli.add_command(encode_command())
cli.add_command(derive_command())
cli.add_command(oracle_command())
