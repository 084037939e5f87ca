from contextlib import contextmanager

from deepdiff import DeepDiff


@contextmanager
def does_not_raise():
    """A helpful context manager to use inplace of a pytest raise statement
    when no exception is expected."""
    yield


def compare_json(document_a, document_b):
    """Compares two JSON compatible documents for equality, printing the
    difference when they are not equal."""

    difference = DeepDiff(document_a, document_b)

    if not len(difference) == 0:
        print(difference)

    assert len(difference) == 0
