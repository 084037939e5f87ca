"""Canonical JSON serialization of artifacts.

Every artifact is wrapped in an ``Artifact`` envelope with the keys ``kind``,
``name`` and ``term``. The ``term`` holds the nameless form produced by
``to_nameless``: nested ``{"node": ...}`` objects in which bound variables are
de Bruijn indices. The original binder names are kept as ``hint`` entries so
that parsing an artifact back restores readable names.
"""
import json
import logging
from typing import Any, Dict, Union

from deepind.library.core.alpha import from_nameless, to_nameless
from deepind.library.core.declarations import DataDecl
from deepind.library.core.terms import (
    FunctionDef,
    Hypothesis,
    LiftingDef,
    Postulate,
    RuleDef,
)
from deepind.library.induct.kt import KTWitness
from deepind.library.models.artifacts import Artifact, ArtifactKind

logger = logging.getLogger(__name__)

ArtifactType = Union[
    DataDecl, FunctionDef, Hypothesis, KTWitness, LiftingDef, Postulate, RuleDef
]

_KINDS = [
    (LiftingDef, ArtifactKind.LIFTING),
    (FunctionDef, ArtifactKind.FUNCTION),
    (RuleDef, ArtifactKind.RULE),
    (Hypothesis, ArtifactKind.HYPOTHESIS),
    (Postulate, ArtifactKind.POSTULATE),
    (DataDecl, ArtifactKind.DECLARATION),
    (KTWitness, ArtifactKind.KT),
]


def artifact_kind(artifact: ArtifactType) -> ArtifactKind:

    for artifact_type, kind in _KINDS:

        if isinstance(artifact, artifact_type):
            return kind

    raise NotImplementedError(
        f"{type(artifact).__name__} objects cannot be serialized"
    )


def _kt_term(witness: KTWitness) -> Dict[str, Any]:

    return {
        "node": "kt",
        "function": to_nameless(witness.function, hints=True),
        "postulates": [
            to_nameless(postulate, hints=True) for postulate in witness.postulates
        ],
        "equal_map": None
        if witness.equal_map is None
        else to_nameless(witness.equal_map, hints=True),
        "dependencies": [
            to_nameless(function, hints=True) for function in witness.dependencies
        ],
    }


def to_artifact(artifact: ArtifactType) -> Artifact:
    """Wraps an artifact in its JSON envelope."""

    kind = artifact_kind(artifact)

    if kind == ArtifactKind.KT:
        return Artifact(
            kind=kind, name=artifact.function.name, term=_kt_term(artifact)
        )

    return Artifact(
        kind=kind, name=artifact.name, term=to_nameless(artifact, hints=True)
    )


def emit_json(artifact: ArtifactType) -> str:
    """Serializes an artifact to canonical JSON, i.e. with its keys sorted and
    no insignificant whitespace, so that identical artifacts always produce
    identical bytes."""

    envelope = to_artifact(artifact)
    logger.debug(f"serializing the {envelope.kind.value} {envelope.name}")

    return envelope.json(sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_json(text: str) -> ArtifactType:
    """Rebuilds an artifact from the output of ``emit_json``.

    Raises
    ------
    pydantic.ValidationError
        If the text is not a valid artifact envelope.
    """

    envelope = Artifact.parse_obj(json.loads(text))

    if envelope.kind != ArtifactKind.KT:
        return from_nameless(envelope.term)

    term = envelope.term

    return KTWitness(
        from_nameless(term["function"]),
        tuple(from_nameless(item) for item in term["postulates"]),
        None if term["equal_map"] is None else from_nameless(term["equal_map"]),
        tuple(from_nameless(item) for item in term.get("dependencies", [])),
    )
