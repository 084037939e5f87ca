import logging
from dataclasses import replace
from typing import Dict, Iterable, Iterator, List, Optional

from deepind.library.core.classify import classify_decl
from deepind.library.core.declarations import Classification, DataDecl
from deepind.library.core.types import BUILTIN_TYPES

logger = logging.getLogger(__name__)


class Environment:
    """An immutable, ordered collection of classified declarations in which
    type constructor names are looked up.

    Declarations are stored in dependency order: every declaration only refers
    to itself, builtins and the declarations which precede it.
    """

    def __init__(self, declarations: Iterable[DataDecl], module_names=None):

        self._declarations: Dict[str, DataDecl] = {}

        for declaration in declarations:

            if declaration.classification is None:
                declaration = replace(
                    declaration, classification=classify_decl(declaration)
                )

            self._declarations[declaration.name] = declaration

        self.module_names: List[str] = (
            list(self._declarations)
            if module_names is None
            else [name for name in module_names]
        )

    @classmethod
    def from_module(cls, module) -> "Environment":
        """Builds the environment of a parsed ``SourceModule``: the prelude
        declarations it does not shadow followed by its own declarations."""

        module_names = [declaration.name for declaration in module.declarations]
        ordered = module.ordered_declarations()

        prelude = [
            declaration
            for declaration in module.prelude
            if declaration.name not in module_names
        ]

        environment = cls([*prelude, *ordered], [item.name for item in ordered])

        logger.debug(
            "built an environment containing "
            + ", ".join(
                f"{item.name} ({item.classification.value})" for item in environment
            )
        )

        return environment

    def __contains__(self, name: str) -> bool:
        return name in self._declarations or name in BUILTIN_TYPES

    def __iter__(self) -> Iterator[DataDecl]:
        return iter(self._declarations.values())

    def __getitem__(self, name: str) -> DataDecl:
        return self._declarations[name]

    def get(self, name: str) -> Optional[DataDecl]:
        return self._declarations.get(name)

    def arity(self, name: str) -> int:

        if name in BUILTIN_TYPES:
            return BUILTIN_TYPES[name]

        return self._declarations[name].arity

    def classification(self, name: str) -> Optional[Classification]:
        """The classification of a declaration, or ``None`` for a builtin."""

        declaration = self._declarations.get(name)
        return None if declaration is None else declaration.classification

    @property
    def module_declarations(self) -> List[DataDecl]:
        """The declarations of the module itself, excluding the prelude, in
        dependency order."""
        return [self._declarations[name] for name in self.module_names]

    def with_declaration(self, declaration: DataDecl) -> "Environment":
        """Returns a copy of the environment in which ``declaration`` replaces
        the declaration of the same name."""

        return Environment(
            [
                declaration if existing.name == declaration.name else existing
                for existing in self
            ],
            self.module_names,
        )
