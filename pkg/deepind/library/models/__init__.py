from deepind.library.models.artifacts import Artifact, ArtifactKind
from deepind.library.models.diagnostics import (
    Diagnostic,
    DiagnosticCode,
    Span,
    make_diagnostic,
)

__all__ = [Artifact, ArtifactKind, Diagnostic, DiagnosticCode, Span, make_diagnostic]
