from enum import Enum
from typing import Any, Dict

from pydantic import Field

from deepind.library.models.models import BaseModelWithFile
from deepind.library.models.validators.string import NonEmptyStr


class ArtifactKind(Enum):

    DECLARATION = "declaration"
    LIFTING = "lifting"
    FUNCTION = "function"
    HYPOTHESIS = "hypothesis"
    RULE = "rule"
    POSTULATE = "postulate"
    KT = "kt"


class Artifact(BaseModelWithFile):
    """The JSON envelope of an emitted artifact."""

    kind: ArtifactKind = Field(..., description="The kind of artifact.")
    name: NonEmptyStr = Field(..., description="The name of the artifact.")

    term: Dict[str, Any] = Field(
        ...,
        description="The artifact itself in its nameless form, where bound "
        "variables are replaced by de Bruijn indices.",
    )
