import logging
import sys
from typing import Optional

_LOG_LEVELS = {
    "none": None,
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


def get_log_levels():
    return [*_LOG_LEVELS]


def string_to_log_level(log_level_string: str) -> Optional[int]:

    if log_level_string not in _LOG_LEVELS:
        raise NotImplementedError()

    return _LOG_LEVELS[log_level_string]


def setup_timestamp_logging(logging_level: int, file_path: Optional[str] = None):
    """Set up timestamp-based logging on the root logger.

    Parameters
    ----------
    logging_level
        The logger level.
    file_path
        The file to write the log to. If none, the log is written to
        the standard error stream so that it does not interleave with
        any artifacts written to standard output.
    """
    formatter = logging.Formatter(
        fmt="%(asctime)s.%(msecs)03d %(levelname)-8s %(name)s %(message)s",
        datefmt="%H:%M:%S",
    )

    handler = (
        logging.StreamHandler(stream=sys.stderr)
        if file_path is None
        else logging.FileHandler(file_path)
    )
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging_level)
    root_logger.addHandler(handler)
