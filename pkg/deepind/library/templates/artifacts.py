from typing import Any, Dict

from deepind.library.templates.templates import BaseTemplate


class ArtifactTemplate(BaseTemplate):
    """Renders one of the artifact layouts, e.g. ``function.txt``."""

    @classmethod
    def generate(cls, template_name: str, context: Dict[str, Any], **options) -> str:

        cls._check_unrecognised_options(**options)
        return cls._load_template(template_name).render(**context)
