from deepind.library.emit.serialization import emit_json, parse_json, to_artifact
from deepind.library.emit.text import emit_text
from deepind.library.syntax.pretty import pretty_clause, pretty_pattern, pretty_term

__all__ = [
    emit_json,
    emit_text,
    parse_json,
    pretty_clause,
    pretty_pattern,
    pretty_term,
    to_artifact,
]
