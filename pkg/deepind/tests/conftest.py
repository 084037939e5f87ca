import pytest

from deepind.library.interp import FinModel
from deepind.tests.utilities.corpus import load_corpus_environment


@pytest.fixture(scope="module")
def seq_environment():
    return load_corpus_environment("seq")


@pytest.fixture(scope="module")
def lterm_environment():
    return load_corpus_environment("lterm")


@pytest.fixture()
def small_model() -> FinModel:
    """A finite model small enough for exhaustive sweeps to stay quick."""
    return FinModel(carrier_size=2, depth=2)
