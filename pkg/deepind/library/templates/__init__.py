from deepind.library.templates.artifacts import ArtifactTemplate
from deepind.library.templates.templates import BaseTemplate

__all__ = [ArtifactTemplate, BaseTemplate]
