import shutil

import pytest
from click.testing import CliRunner

from deepind.library.utilities import get_data_file_path


@pytest.fixture()
def runner() -> CliRunner:
    """Creates a new click CLI runner object inside of an isolated file
    system containing a copy of the example corpus."""

    click_runner = CliRunner()

    with click_runner.isolated_filesystem():

        shutil.copytree(get_data_file_path("corpus"), "corpus")
        yield click_runner
