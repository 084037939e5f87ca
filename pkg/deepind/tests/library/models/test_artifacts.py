import pytest
from pydantic import ValidationError

from deepind.library.models import Artifact, ArtifactKind


def test_artifact_to_file(tmpdir):

    artifact = Artifact(kind=ArtifactKind.LIFTING, name="Seq^", term={"node": "x"})

    file_path = str(tmpdir.join("artifact.json"))
    artifact.to_file(file_path)

    assert Artifact.parse_file(file_path) == artifact


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kind": "lifting", "name": "", "term": {}},
        {"kind": "unknown", "name": "x", "term": {}},
        {"kind": "lifting", "name": "x", "term": {}, "extra": 1},
    ],
)
def test_artifact_validation(kwargs):

    with pytest.raises(ValidationError):
        Artifact(**kwargs)
