"""Renders artifacts as text in the concrete syntax of ``syntax.pretty``."""

from deepind.library.core.terms import (
    FunctionDef,
    Hypothesis,
    Postulate,
    RuleDef,
)
from deepind.library.induct.kt import KTWitness
from deepind.library.syntax.pretty import pretty_clause, pretty_term
from deepind.library.templates import ArtifactTemplate


def _function_text(definition: FunctionDef, unicode: bool) -> str:

    return ArtifactTemplate.generate(
        "function.txt",
        {
            "name": definition.name,
            "signature": pretty_term(definition.signature, unicode),
            "clauses": [
                pretty_clause(definition.name, clause, unicode)
                for clause in definition.clauses
            ],
        },
    )


def _hypothesis_context(hypothesis: Hypothesis, unicode: bool):
    return {"name": hypothesis.name, "term": pretty_term(hypothesis.term, unicode)}


def _rule_text(rule: RuleDef, unicode: bool) -> str:

    return ArtifactTemplate.generate(
        "rule.txt",
        {
            "name": rule.name,
            "statement": pretty_term(rule.statement, unicode),
            "hypotheses": [
                _hypothesis_context(hypothesis, unicode)
                for hypothesis in rule.hypotheses
            ],
        },
    )


def _postulate_text(postulate: Postulate, unicode: bool) -> str:

    return ArtifactTemplate.generate(
        "postulate.txt",
        {
            "name": postulate.name,
            "signature": pretty_term(postulate.signature, unicode),
        },
    )


def emit_text(artifact, unicode: bool = False) -> str:
    """Renders a lifting, function, rule, hypothesis, postulate or ``G^KT``
    witness as deterministic text.

    Signatures and statements are printed on a line of their own indented by
    two spaces below the name they belong to, function clauses are printed one
    per line. A ``G^KT`` witness is rendered as its postulated lemmas, the
    functions it depends on, the function itself and, if present, the
    ``G^EqualMap`` skeleton, separated by blank lines.

    Parameters
    ----------
    artifact
        The artifact to render.
    unicode
        Whether to use unicode symbols (``∀``, ``×``, ``∃[ x ]``...) rather than
        their ASCII spellings.
    """

    if isinstance(artifact, FunctionDef):
        return _function_text(artifact, unicode)
    if isinstance(artifact, RuleDef):
        return _rule_text(artifact, unicode)
    if isinstance(artifact, Postulate):
        return _postulate_text(artifact, unicode)

    if isinstance(artifact, Hypothesis):
        return ArtifactTemplate.generate(
            "hypothesis.txt", _hypothesis_context(artifact, unicode)
        )

    if isinstance(artifact, KTWitness):

        sections = [_postulate_text(item, unicode) for item in artifact.postulates]
        sections.extend(
            _function_text(item, unicode) for item in artifact.dependencies
        )
        sections.append(_function_text(artifact.function, unicode))

        if artifact.equal_map is not None:
            sections.append(_function_text(artifact.equal_map, unicode))

        return "\n".join(sections)

    raise NotImplementedError(
        f"{type(artifact).__name__} objects cannot be rendered as text"
    )
