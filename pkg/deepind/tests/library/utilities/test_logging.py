import logging
from tempfile import NamedTemporaryFile

import pytest

from deepind.library.utilities.logging import (
    get_log_levels,
    setup_timestamp_logging,
    string_to_log_level,
)


@pytest.mark.parametrize("log_level_string", get_log_levels())
def test_string_to_logging_level(log_level_string):
    string_to_log_level(log_level_string)


def test_string_to_logging_level_unknown():

    with pytest.raises(NotImplementedError):
        string_to_log_level("verbose")


def test_setup_logging():
    """Test that timestamp logging can be setup without exception."""

    root_logger = logging.getLogger()
    handlers = [*root_logger.handlers]

    setup_timestamp_logging(logging_level=logging.INFO)

    with NamedTemporaryFile() as file:
        setup_timestamp_logging(logging_level=logging.INFO, file_path=file.name)

    for handler in root_logger.handlers[len(handlers) :]:
        root_logger.removeHandler(handler)
