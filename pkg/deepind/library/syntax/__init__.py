from deepind.library.syntax.parser import SourceModule, load_prelude, parse_module
from deepind.library.syntax.printer import print_declaration, print_module, print_type

__all__ = [
    load_prelude,
    parse_module,
    print_declaration,
    print_module,
    print_type,
    SourceModule,
]
