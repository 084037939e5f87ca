import abc
import os

from jinja2 import Template

from deepind.library.utilities import get_data_file_path
from deepind.library.utilities.exceptions import UnrecognisedKwargsError


class BaseTemplate(abc.ABC):
    """The base of the text templates stored in ``deepind/data/jinja``."""

    @classmethod
    def _check_unrecognised_options(cls, **options):

        if len(options) == 0:
            return

        raise UnrecognisedKwargsError(*options)

    @classmethod
    def _load_template(cls, template_name: str) -> Template:
        """Loads a packaged template. Block tags do not leave blank lines behind
        and the trailing newline of the file is kept.

        Raises
        ------
        FileNotFoundError
        """

        template_file_name = get_data_file_path(os.path.join("jinja", template_name))

        with open(template_file_name, encoding="utf-8") as file:
            return Template(file.read(), trim_blocks=True, keep_trailing_newline=True)

    @classmethod
    @abc.abstractmethod
    def generate(cls, *args, **kwargs) -> str:
        """Renders the template."""
