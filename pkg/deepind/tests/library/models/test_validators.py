import pytest
from pydantic import BaseModel, ValidationError

from deepind.library.models.validators.string import IdentifierStr, NonEmptyStr


class MockStrClass(BaseModel):

    string_field: NonEmptyStr


class MockIdStrClass(BaseModel):

    string_field: IdentifierStr


def test_non_empty_str():

    MockStrClass(string_field="x")

    with pytest.raises(ValidationError):
        MockStrClass(string_field="")


@pytest.mark.parametrize("valid_string", ["Seq", "LTerm", "Q_A", "A'", "_T1"])
def test_identifier_str_valid(valid_string):
    MockIdStrClass(string_field=valid_string)


@pytest.mark.parametrize("invalid_string", ["", "1T", "Seq^", "Seq A", "A-B"])
def test_identifier_str_invalid(invalid_string):

    with pytest.raises(ValidationError):
        MockIdStrClass(string_field=invalid_string)
